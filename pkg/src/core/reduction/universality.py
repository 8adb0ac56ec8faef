"""
Grammar-to-GJFA Universality Reduction

Purpose:
    Builds, from a GNF grammar G over Σ_T with nonterminals A_1..A_m, the GJFA M_G
    over Γ = Σ_T ∪ Σ_N ∪ Σ_B (Σ_B = {b_1..b_m}, one fresh symbol per nonterminal)
    together with the word sets the correctness argument uses:

        P_BU = { b_j u   : (A_j -> u) is a rule of G }
        P_NB = { A_i b_i : i = 1..m }
        P_C  = { x A_1 : x ∈ Σ_T } ∪ P_NB ∪ { b_i A_{i+1} : i < m } ∪ { b_m x : x ∈ Σ_T }
        t    = A_1 b_1 A_2 b_2 ... A_m b_m

The Machine:
    Five states q0..q4, start q0, finals {q4}. Three accepting branches:

        q1  (q0, ε, q1); (q1, p, q1) for p ∈ P_BU ∪ P_NB; (q1, A_S, q4)
            reduces an annotated derivation word back to the start symbol
        q2  (q0, u, q2) for u ∈ Γ² \\ P_C; (q2, x, q2) for x ∈ Γ; (q2, ε, q4)
            accepts anything containing a two-letter factor outside P_C
        q3  (q0, ε, q3); (q3, x, q3) for x ∈ Σ_T; (q3, b a, q3) for b ∈ Σ_B, a ∈ Σ_N;
            (q3, u, q4) for u ∈ Σ_N ∪ Σ_B ∪ {ε}
            accepts factors of (Σ_T t)* with a bad first or last letter

    The q3 final step uses one rule per symbol plus one ε rule.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..errors import EmptyInputError, NotDerivableError
from ..gjfa import Gjfa, Rule
from ..grammar import leftmost_derivation, validate
from ..logger import log
from ..words import EPSILON, Alphabet, Word, as_tuple, project


B_MARKER = 'β'
STATES = ('q0', 'q1', 'q2', 'q3', 'q4')


@dataclass(frozen=True)
class ReductionArtifacts:
    terminals: Alphabet
    nonterminals: Alphabet
    b_symbols: Tuple[str, ...]
    start: str
    gamma: Alphabet
    p_bu: Tuple[Word, ...]
    p_nb: Tuple[Word, ...]
    p_c: Tuple[Word, ...]
    t: Word
    machine: Gjfa

    @property
    def b_alphabet(self):
        return Alphabet(self.b_symbols)

    @property
    def b_of(self) -> Dict[str, str]:
        return dict(zip(self.nonterminals.symbols, self.b_symbols))


def fresh_b_symbols(grammar) -> Tuple[str, ...]:
    """One fresh symbol per nonterminal: the name behind one or more 'β' markers."""
    taken = set(grammar.terminals) | set(grammar.nonterminals)
    names = []
    for nonterminal in grammar.nonterminals:
        name = B_MARKER + nonterminal
        while name in taken:
            name = B_MARKER + name
        taken.add(name)
        names.append(name)
    return tuple(names)


def _dedupe(words):
    seen = []
    for w in words:
        if w not in seen:
            seen.append(w)
    return tuple(seen)


def build_artifacts(grammar) -> ReductionArtifacts:
    """
    Construct M_G and the auxiliary sets for a GNF grammar.

    Raises:
        GrammarError: (subclasses) if the grammar does not validate
    """
    validate(grammar)

    sigma_t = grammar.terminals
    sigma_n = grammar.nonterminal_alphabet
    b_syms = fresh_b_symbols(grammar)
    sigma_b = Alphabet(b_syms)
    gamma = sigma_t.union(sigma_n, sigma_b)
    b_of = dict(zip(sigma_n.symbols, b_syms))
    nts = sigma_n.symbols
    m = len(nts)

    p_bu = _dedupe(Word((b_of[r.lhs],)) + r.rhs for r in grammar.rules)
    p_nb = tuple(Word((a, b_of[a])) for a in nts)
    p_c = _dedupe(
        [Word((x, nts[0])) for x in sigma_t]
        + list(p_nb)
        + [Word((b_syms[i], nts[i + 1])) for i in range(m - 1)]
        + [Word((b_syms[-1], x)) for x in sigma_t]
    )
    t = Word(tuple(s for a in nts for s in (a, b_of[a])))

    rules: List[Rule] = [Rule('q0', EPSILON, 'q1')]
    rules += [Rule('q1', p, 'q1') for p in p_bu + p_nb]
    rules.append(Rule('q1', Word((grammar.start,)), 'q4'))

    allowed = set(p_c)
    rules += [Rule('q0', Word((x, y)), 'q2')
              for x in gamma for y in gamma if Word((x, y)) not in allowed]
    rules += [Rule('q2', Word((x,)), 'q2') for x in gamma]
    rules.append(Rule('q2', EPSILON, 'q4'))

    rules.append(Rule('q0', EPSILON, 'q3'))
    rules += [Rule('q3', Word((x,)), 'q3') for x in sigma_t]
    rules += [Rule('q3', Word((b, a)), 'q3') for b in b_syms for a in nts]
    rules += [Rule('q3', Word((u,)), 'q4') for u in nts + b_syms]
    rules.append(Rule('q3', EPSILON, 'q4'))

    machine = Gjfa(STATES, gamma, tuple(rules), 'q0', frozenset({'q4'}))
    log.debug(f"reduction: |Γ| = {len(gamma)}, {len(rules)} rules, |P_C| = {len(p_c)}")

    return ReductionArtifacts(
        terminals=sigma_t,
        nonterminals=sigma_n,
        b_symbols=b_syms,
        start=grammar.start,
        gamma=gamma,
        p_bu=p_bu,
        p_nb=p_nb,
        p_c=p_c,
        t=t,
        machine=machine,
    )


def interleave(artifacts, v) -> Word:
    """
    x_1 t x_2 t ... x_n t for v = x_1 ... x_n.

    Raises:
        EmptyInputError: v is ε
        AlphabetMismatchError: v is not over Σ_T
    """
    symbols = as_tuple(v)
    if not symbols:
        raise EmptyInputError("interleave needs a non-empty terminal word")
    artifacts.terminals.require(symbols)
    t = artifacts.t.symbols
    return Word(tuple(s for x in symbols for s in (x,) + t))


def annotate(artifacts, grammar, v) -> List[Word]:
    """
    The annotated derivation words w_0 = A_S, ..., w_d for the leftmost derivation
    of v: each step rewrites the leftmost nonterminal occurrence not yet followed by
    its b-symbol, A -> A b_A u.

    Raises:
        NotDerivableError: if the grammar does not derive v
    """
    derivation = leftmost_derivation(grammar, v)
    if derivation is None:
        raise NotDerivableError(f"{Word(as_tuple(v))} is not derivable from {grammar.start}")

    b_of = artifacts.b_of
    words = [Word((grammar.start,))]
    for index in derivation:
        rule = grammar.rules[index]
        current = words[-1].symbols
        at = next(i for i, s in enumerate(current)
                  if s in b_of and (i + 1 == len(current) or current[i + 1] != b_of[s]))
        assert current[at] == rule.lhs, "annotation diverged from the leftmost derivation"
        words.append(Word(current[:at + 1] + (b_of[rule.lhs],) + rule.rhs.symbols + current[at + 1:]))

    assert project(words[-1], artifacts.terminals) == Word(as_tuple(v))
    return words


def reduce_wd_check(artifacts, w_d) -> bool:
    """True iff w_d reduces to the one-letter word A_S by deleting factors in P_BU."""
    goal = (artifacts.start,)
    pieces = [p.symbols for p in artifacts.p_bu]
    seen = set()
    stack = [as_tuple(w_d)]
    while stack:
        current = stack.pop()
        if current == goal:
            return True
        if current in seen:
            continue
        seen.add(current)
        for piece in pieces:
            size = len(piece)
            for i in range(len(current) - size + 1):
                if current[i:i + size] == piece:
                    stack.append(current[:i] + current[i + size:])
    return False
