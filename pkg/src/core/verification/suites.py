"""
Verification Suites

Purpose:
    Each suite binds one claim about the two constructions to a finite, executable
    check and reports PASS or FAIL per check. The suites are evidence over bounded
    slices (all words up to a length, a fixed pool of random machines), not proofs.

Suites (in run order):
    lemma2      in_k(w) ⇔ φ(w) ∈ {u}*, all binary words up to length 12
    lemma3      Φ step laws of R_uV over {u, V}^{<=8}; Φ(u^n) = n
    lemma4      every single production u ⊣ v of R_01 (|u| <= 10) is one R_uV step on φ
    lemma6      the 16-step chains for α, β ∈ {1, 2, 3}
    cor5        the chained lemma6 certificates for β ∈ {1, 2, 3}
    cor7        the ε ⊣* 00(1100)^{N_k} certificates for k <= 2; the closing chain
                does not replay with 2b / 2a at its two right-end steps
    cor8        length set of L(R_01) ∩ K up to 18 is {2, 6, 18}
    spectrum    all-u words reachable in R_uV up to 20 have length 2, 6 or 18;
                φ maps L(R_01) into L(R_uV)
    reduction   the reverse-direction cases of the GJFA reduction on G_a and G_ab
    gjfa-cross  search and enumeration agree on a seeded pool of random GJFA

Determinism:
    Everything except wall time is a function of the code and the seed, so two runs
    with the same seed render identical PASS/FAIL lines.
"""

import time
from dataclasses import replace
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, Iterable, List

from ..config import load_settings
from ..errors import UnknownSuiteError
from ..gjfa import accepts, enumerate_words, machine_pool
from ..grammar import derives, grammar_a, grammar_ab
from ..logger import log
from ..reduction import annotate, build_artifacts, interleave, reduce_wd_check
from ..rewriting import apply, applicable, forward_closure, generate, productions, reduce_to_empty, validate_trace
from ..systems import (
    BINARY,
    UV,
    block_word,
    builtin_r01,
    builtin_ruv,
    closing_chain,
    corollary5_chain,
    corollary7_derivation,
    in_k,
    is_all_u,
    lemma6_chain,
    level_blocks,
    phi,
    potential,
    simulate_step,
)
from ..words import EPSILON, Alphabet, Word, all_words, insertion_chain, word
from .report import Check, SuiteReport


SPECTRUM = (2, 6, 18)
SPECTRUM_WITNESSES = ('00', '100110', '00' + '1100' * 4)
CROSS_ALPHABET = Alphabet.of('a', 'b')
CROSS_MAXLEN = 6

SUITES: Dict[str, Callable] = {}


def suite(name):
    """Register a suite function under `name`; registration order is run order."""
    def register(fn):
        SUITES[name] = fn
        return fn
    return register


def _check(name, failures: Iterable[str]) -> Check:
    """Pass when `failures` is empty; otherwise the first failure is the counterexample."""
    first = next(iter(failures), None)
    return Check(name, first is None, first)


def _expect(name, ok, counterexample) -> Check:
    return Check(name, bool(ok), None if ok else counterexample)


def _trace_check(name, trace, expected, steps=None) -> Check:
    bad = validate_trace(builtin_r01(), trace)
    if bad is not None:
        return Check(name, False, f"step {bad}")
    if trace.final != expected:
        return Check(name, False, f"final={trace.final}")
    if steps is not None and len(trace.steps) != steps:
        return Check(name, False, f"steps={len(trace.steps)}")
    words = trace.words()
    for index in range(1, len(words)):
        if len(words[index]) != len(words[index - 1]) + 2:
            return Check(name, False, f"step {index - 1}")
    return Check(name, True)


@lru_cache(maxsize=None)
def _r01_language(maxlen):
    return tuple(generate(builtin_r01(), maxlen))


@suite('lemma2')
def _lemma2(settings) -> List[Check]:
    words = all_words(BINARY, 12)
    return [
        _check('k-iff-all-u', (f"w={w}" for w in words if in_k(w) != is_all_u(phi(w)))),
        _check('phi-keeps-length', (f"w={w}" for w in words if len(phi(w)) != len(w))),
    ]


@suite('lemma3')
def _lemma3(settings) -> List[Check]:
    system = builtin_ruv()
    words = all_words(UV, 8)
    rewrites = [
        (instr.id, w, position, apply(system, w, instr, position))
        for w in words
        for instr, position in applicable(system, w)
    ]

    def violations(ident, law):
        for rule, w, position, v in rewrites:
            if rule == ident and not law(potential(w), potential(v)):
                yield f"w={w} @ {position}"

    return [
        _check('rule0-creates-2', violations('0', lambda before, after: (before, after) == (0, 2))),
        _check('rule1-triples', violations('1', lambda before, after: after == 3 * before)),
        _check('rule2-preserves', violations('2', lambda before, after: after == before)),
        _check('rule3-preserves', violations('3', lambda before, after: after == before)),
        _check('all-u-equals-length', (f"w={w}" for w in words if is_all_u(w) and potential(w) != len(w))),
    ]


@suite('lemma4')
def _lemma4(settings) -> List[Check]:
    system = builtin_r01()

    def failures():
        for u in all_words(BINARY, 10):
            for instr, position, v in productions(system, u):
                if simulate_step(u, v) is None:
                    yield f"u={u} v={v} ({instr.id} @ {position})"

    return [_check('one-step-simulation', failures())]


@suite('lemma6')
def _lemma6(settings) -> List[Check]:
    return [
        _trace_check(f"chain-{alpha}-{beta}", lemma6_chain(alpha, beta),
                     block_word(alpha + 9, '1000', beta - 1), steps=16)
        for alpha, beta in product((1, 2, 3), repeat=2)
    ]


@suite('cor5')
def _cor5(settings) -> List[Check]:
    return [
        _trace_check(f"chain-{beta}", corollary5_chain(beta), block_word(9 * beta, '1000'), steps=16 * beta)
        for beta in (1, 2, 3)
    ]


# The closing chain touches the right end of the word at its first and last step.
# Labelled 2b and 2a there it must not replay; 3b and 3a are used instead.
TYPE2_CLOSING_LABELS = ((0, '2b'), (5, '2a'))


def _type2_closing_misses():
    closing = closing_chain(level_blocks(1))
    for index, label in TYPE2_CLOSING_LABELS:
        steps = list(closing.steps)
        steps[index] = replace(steps[index], instruction_id=label)
        bad = validate_trace(builtin_r01(), replace(closing, steps=tuple(steps)))
        if bad != index:
            yield f"{label} @ step {index}: first bad step {bad}"


@suite('cor7')
def _cor7(settings) -> List[Check]:
    checks = []
    for k in (0, 1, 2):
        trace = corollary7_derivation(k)
        checks.append(_trace_check(f"derivation-{k}", trace, block_word(level_blocks(k))))
        if k <= 1:
            accepted, _ = reduce_to_empty(builtin_r01(), trace.final)
            checks.append(_expect(f"reduces-{k}", accepted, f"w={trace.final}"))
    checks.append(_check('closing-type2-labels-rejected', _type2_closing_misses()))
    return checks


@suite('cor8')
def _cor8(settings) -> List[Check]:
    language = _r01_language(18)
    lengths = sorted({len(w) for w in language if w and in_k(w)})
    members = set(language)
    checks = [_expect('k-length-set', tuple(lengths) == SPECTRUM, f"lengths={lengths}")]
    for text in SPECTRUM_WITNESSES:
        w = word(text)
        checks.append(_expect(f"witness-{len(w)}", w in members and in_k(w), f"w={w}"))
    return checks


@suite('spectrum')
def _spectrum(settings) -> List[Check]:
    closure = forward_closure(builtin_ruv(), EPSILON, 20)
    lengths = sorted({len(w) for w in closure if w and is_all_u(w)})
    uv_language = {w for w in closure if len(w) <= 18}
    return [
        _check('ruv-all-u-lengths', (f"|w|={n}" for n in lengths if n not in SPECTRUM)),
        _check('phi-into-ruv', (f"w={w}" for w in _r01_language(18) if phi(w) not in uv_language)),
    ]


def _bad_factor_words(artifacts, maxlen):
    allowed = {p.symbols for p in artifacts.p_c}
    for w in all_words(artifacts.gamma, maxlen):
        s = w.symbols
        if any(s[i:i + 2] not in allowed for i in range(len(s) - 1)):
            yield w


def _boundary_factors(artifacts, maxlen):
    """Factors (|w| <= maxlen) of (Σ_T t)* that start in Σ_B or end in Σ_N."""
    period = 1 + len(artifacts.t)
    blocks = maxlen // period + 2
    factors = set()
    for terminals in product(artifacts.terminals.symbols, repeat=blocks):
        s = interleave(artifacts, terminals).symbols
        for i in range(len(s)):
            for j in range(i + 1, min(len(s), i + maxlen) + 1):
                factors.add(s[i:j])
    b_symbols = set(artifacts.b_symbols)
    nonterminals = set(artifacts.nonterminals)
    edge = [f for f in factors if f[0] in b_symbols or f[-1] in nonterminals]
    return [Word(f) for f in sorted(edge, key=artifacts.gamma.key)]


def _terminal_words(artifacts, maxlen):
    for n in range(1, maxlen + 1):
        for symbols in product(artifacts.terminals.symbols, repeat=n):
            yield Word(symbols)


def _reduction_checks(label, grammar, interleave_bound) -> List[Check]:
    artifacts = build_artifacts(grammar)
    machine = artifacts.machine

    def rejected(words):
        for w in words:
            if not accepts(machine, w)[0]:
                yield f"w={w.text()}"

    def missed_q1(words):
        for w in words:
            ok, witness = accepts(machine, w)
            if not ok or not witness.steps or witness.steps[0].rule.target != 'q1':
                yield f"w={w.text()}"

    derivable = [v for v in _terminal_words(artifacts, 3) if derives(grammar, v)]
    annotated = [annotate(artifacts, grammar, v)[-1] for v in derivable]

    def unsound():
        for v in _terminal_words(artifacts, interleave_bound):
            if accepts(machine, interleave(artifacts, v))[0] and not derives(grammar, v):
                yield f"v={v}"

    return [
        _check(f"{label}.bad-factor-accepted", rejected(_bad_factor_words(artifacts, 5))),
        _check(f"{label}.bad-boundary-accepted", rejected(_boundary_factors(artifacts, 6))),
        _check(f"{label}.wd-accepted", missed_q1(annotated)),
        _check(f"{label}.wd-reduces", (f"w={w.text()}" for w in annotated if not reduce_wd_check(artifacts, w))),
        _check(f"{label}.interleave-sound", unsound()),
    ]


@suite('reduction')
def _reduction(settings) -> List[Check]:
    checks = _reduction_checks('G_a', grammar_a(), 3) + _reduction_checks('G_ab', grammar_ab(), 2)
    artifacts = build_artifacts(grammar_ab())
    aa = interleave(artifacts, word('aa'))
    checks.append(_expect('G_ab.rejects-interleave-aa', not accepts(artifacts.machine, aa)[0], f"w={aa.text()}"))
    return checks


@suite('gjfa-cross')
def _gjfa_cross(settings) -> List[Check]:
    pool = machine_pool(settings.seed, settings.pool_size, alphabet=CROSS_ALPHABET)
    words = all_words(CROSS_ALPHABET, CROSS_MAXLEN)
    disagreements = []
    bad_witnesses = []
    for index, machine in enumerate(pool):
        accepted = set(enumerate_words(machine, CROSS_MAXLEN))
        for w in words:
            ok, witness = accepts(machine, w)
            if ok != (w in accepted):
                disagreements.append(f"machine={index} w={w}")
            if ok:
                chain = insertion_chain(EPSILON, list(reversed(witness.labels())), CROSS_ALPHABET)
                if not witness.is_valid_for(machine, w) or w not in chain:
                    bad_witnesses.append(f"machine={index} w={w}")
        if disagreements or bad_witnesses:
            break
    return [
        _check('search-matches-enumeration', disagreements),
        _check('witness-replays', bad_witnesses),
        _expect('pool-size', len(pool) == settings.pool_size, f"size={len(pool)}"),
    ]


def run_suite(name, seed=None, pool_size=None) -> SuiteReport:
    """
    Run one named suite.

    Args:
        seed: overrides DISCO_SEED for sampled pools
        pool_size: overrides DISCO_POOL_SIZE

    Raises:
        UnknownSuiteError: if `name` is not a registered suite
    """
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r} (available: {', '.join(SUITES)})")

    settings = load_settings()
    if seed is not None:
        settings = replace(settings, seed=seed)
    if pool_size is not None:
        settings = replace(settings, pool_size=pool_size)

    log.info(f"Running suite {name}")
    started = time.perf_counter()
    checks = tuple(SUITES[name](settings))
    report = SuiteReport(name, checks, time.perf_counter() - started)
    log.info(f"Suite {name} finished: {'PASS' if report.passed else 'FAIL'} ({report.wall_time:.2f}s)")
    return report


def run_all(seed=None, pool_size=None) -> List[SuiteReport]:
    """Every suite in declaration order."""
    return [run_suite(name, seed=seed, pool_size=pool_size) for name in SUITES]
