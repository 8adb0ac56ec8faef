"""
Greibach Normal Form Grammars

Purpose:
    Context-free grammars whose every rule has the shape A -> x γ, with x a terminal
    and γ a (possibly empty) string of nonterminals. They serve as the ground truth
    for the GJFA universality reduction.

Membership:
    A top-down search over (input position, stack of pending nonterminals). Rule
    A -> x γ applies when A is on top of the stack and x is the next input symbol.
    Every stacked nonterminal must still produce at least one terminal, so a state
    whose stack is taller than the remaining input is dead. States are memoized.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..errors import AlphabetMismatchError, EmptyRuleSetError, NotGnfError, UnknownSymbolError
from ..logger import log
from ..words import Alphabet, Word, as_tuple, check_symbol


@dataclass(frozen=True)
class Production:
    lhs: str
    rhs: Word

    def __str__(self):
        return f"{self.lhs} -> {self.rhs.text()}"


@dataclass(frozen=True)
class GnfGrammar:
    terminals: Alphabet
    nonterminals: Tuple[str, ...]
    start: str
    rules: Tuple[Production, ...]

    def __post_init__(self):
        object.__setattr__(self, 'nonterminals', tuple(self.nonterminals))
        object.__setattr__(self, 'rules', tuple(self.rules))

    @property
    def nonterminal_alphabet(self):
        return Alphabet(self.nonterminals)

    def rules_for(self, lhs) -> List[Tuple[int, Production]]:
        return [(i, r) for i, r in enumerate(self.rules) if r.lhs == lhs]


def validate(grammar):
    """
    Check that the grammar is a well-formed GNF grammar.

    Returns:
        The grammar itself, so calls can be chained.

    Raises:
        EmptyRuleSetError: no rules
        UnknownSymbolError: a symbol is neither declared terminal nor nonterminal,
                            or the two sets overlap, or the start symbol is undeclared
        NotGnfError: a right-hand side is empty or not terminal-then-nonterminals
    """
    terminals = set(grammar.terminals)
    nonterminals = set(grammar.nonterminals)

    for name in grammar.nonterminals:
        check_symbol(name)
    if len(nonterminals) != len(grammar.nonterminals):
        raise UnknownSymbolError("duplicate nonterminal")
    overlap = terminals & nonterminals
    if overlap:
        raise UnknownSymbolError(f"symbols declared both terminal and nonterminal: {' '.join(sorted(overlap))}")
    if grammar.start not in nonterminals:
        raise UnknownSymbolError(f"start symbol {grammar.start!r} is not a nonterminal")
    if not grammar.rules:
        raise EmptyRuleSetError("grammar has no rules")

    for index, rule in enumerate(grammar.rules):
        if rule.lhs not in nonterminals:
            raise UnknownSymbolError(f"rule {index + 1} ({rule}): unknown left-hand side {rule.lhs!r}", index)
        for symbol in rule.rhs:
            if symbol not in terminals and symbol not in nonterminals:
                raise UnknownSymbolError(f"rule {index + 1} ({rule}): unknown symbol {symbol!r}", index)
        if not rule.rhs:
            raise NotGnfError(f"rule {index + 1} ({rule}): empty right-hand side", index)
        if rule.rhs[0] not in terminals:
            raise NotGnfError(f"rule {index + 1} ({rule}): right-hand side must start with a terminal", index)
        if any(symbol not in nonterminals for symbol in rule.rhs[1:]):
            raise NotGnfError(f"rule {index + 1} ({rule}): only nonterminals may follow the leading terminal", index)
    return grammar


def _search(grammar, w):
    """First leftmost derivation (by rule index) as a list of rule indices, or None."""
    target = as_tuple(w)
    n = len(target)
    by_lhs = {}
    for index, rule in enumerate(grammar.rules):
        by_lhs.setdefault(rule.lhs, []).append((index, rule.rhs[0], tuple(rule.rhs[1:])))

    dead = set()

    def viable(pos, stack):
        # every pending nonterminal still has to produce at least one terminal
        return len(stack) <= n - pos and (pos, stack) not in dead

    # stacks are stored top-first; path[i] is the rule chosen in frames[i]
    start = (grammar.start,)
    frames = [(0, start, iter(by_lhs.get(grammar.start, ())))] if viable(0, start) else []
    path = []
    result = None
    while frames and result is None:
        pos, stack, options = frames[-1]
        for index, terminal, tail in options:
            if target[pos] != terminal:
                continue
            pending = tail + stack[1:]
            if not pending:
                if pos + 1 == n:
                    result = path + [index]
                    break
                continue
            if viable(pos + 1, pending):
                path.append(index)
                frames.append((pos + 1, pending, iter(by_lhs.get(pending[0], ()))))
                break
        else:
            dead.add((pos, stack))
            frames.pop()
            if path:
                path.pop()

    log.debug(f"derives: {len(dead)} dead states for a word of length {n}")
    return result


def derives(grammar, w) -> bool:
    """
    True iff the start symbol derives `w`.

    Raises:
        AlphabetMismatchError: if `w` contains a non-terminal symbol
    """
    if not grammar.terminals.covers(w):
        raise AlphabetMismatchError(f"{Word(as_tuple(w))} is not over the terminals {{{' '.join(grammar.terminals)}}}")
    return _search(grammar, w) is not None


def leftmost_derivation(grammar, w) -> Optional[List[int]]:
    """
    The lexicographically first leftmost derivation of `w`, as 0-based rule indices,
    or None when `w` is not derivable. In GNF its length equals |w|.
    """
    if not grammar.terminals.covers(w):
        return None
    return _search(grammar, w)


def sentential_forms(grammar, derivation) -> List[Word]:
    """The sentential forms A_S = v_0, v_1, ..., v_d of a leftmost derivation."""
    nonterminals = set(grammar.nonterminals)
    forms = [Word((grammar.start,))]
    for index in derivation:
        current = forms[-1].symbols
        at = next(i for i, s in enumerate(current) if s in nonterminals)
        forms.append(Word(current[:at] + grammar.rules[index].rhs.symbols + current[at + 1:]))
    return forms
