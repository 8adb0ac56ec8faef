"""
Explicit Production Chains of R_01

Three certificates, each a produce-direction DerivationTrace made of single steps:

lemma6_chain(α, β)
    00(1100)^α 1000 (1100)^β  ⊣*  00(1100)^{α+9} 1000 (1100)^{β-1} in 16 steps.
    The chain is stored as a template: every step names its instruction and the
    word split u_1 | u_2 it inserts into, as
        u_1 = 00 (1100)^{α+a} <left tail>,   u_2 = <right head> (1100)^{β-b}.

corollary5_chain(β)
    001000(1100)^β  ⊣*  00(1100)^{9β} 1000, by β chained lemma6 chains starting
    at α = 0 (001000 = 00(1100)^0 1000).

corollary7_derivation(k)
    ε  ⊣*  00(1100)^{N_k} with N_k = (2·9^k - 2)/4. Each level goes
    00(1100)^N ⊣ 1000(1100)^N ⊣ 001000(1100)^N (rules 1a, 1b), then the
    corollary5 chain to 00(1100)^{9N} 1000, then a closing chain of six steps.
"""

from typing import List, Tuple

from ..errors import InvalidParametersError
from ..logger import log
from ..words import Word, word
from ..rewriting import DerivationTrace, Direction, TraceStep, empty_trace, validate_trace
from .builtins import builtin_r01


BLOCK = '1100'
MAX_LEVEL = 6

# (instruction, a, left tail, inserted factor, right head, b)
LEMMA6_TEMPLATE: Tuple[Tuple[str, int, str, str, str, int], ...] = (
    ('2b', 0, '100', '11', '0', 0),
    ('2a', 0, '1', '10', '00110', 0),
    ('2b', 1, '', '11', '0110', 0),
    ('2d', 1, '110', '01', '110', 0),
    ('2d', 2, '1110', '01', '', 0),
    ('2c', 2, '11', '00', '1001', 0),
    ('2a', 3, '1', '10', '001', 0),
    ('2b', 4, '', '11', '01', 0),
    ('2c', 4, '11011', '00', '100', 1),
    ('2d', 4, '110', '01', '1100100', 1),
    ('2c', 5, '11', '00', '100100', 1),
    ('2a', 6, '1', '10', '00100', 1),
    ('2a', 7, '01', '10', '00', 1),
    ('2b', 7, '', '11', '011000', 1),
    ('2d', 7, '110', '01', '11000', 1),
    ('2c', 8, '11', '00', '1000', 1),
)

# Closing chain p1000 ⊣* p(1100)^4 for p = 00(1100)^M: (instruction, u_1 tail, factor, u_2).
# The first and last steps touch the right end of the word, so they are the
# type-3 instructions 3b and 3a (right context 0$), not 2b and 2a.
CLOSING_TEMPLATE: Tuple[Tuple[str, str, str, str], ...] = (
    ('3b', '100', '11', '0'),
    ('2a', '1', '10', '00110'),
    ('2b', '1100', '11', '0110'),
    ('2d', '1100110', '01', '110'),
    ('2c', '1100110011', '00', '10'),
    ('3a', '1100110011001', '10', '0'),
)


def block_word(prefix_blocks, middle='', suffix_blocks=0) -> Word:
    """00 (1100)^prefix_blocks middle (1100)^suffix_blocks."""
    return word('00' + BLOCK * prefix_blocks + middle + BLOCK * suffix_blocks)


def _trace_from_splits(start, splits) -> DerivationTrace:
    """splits: (instruction, u_1 text, factor text, u_2 text) per produce step."""
    steps = []
    previous = start
    for ident, u1, factor, u2 in splits:
        before = word(u1 + u2)
        if before != previous:
            log.warning(f"chain step {len(steps)} ({ident}) does not continue from {previous}")
        steps.append(TraceStep(ident, len(u1) + 1, word(u1 + factor + u2)))
        previous = steps[-1].word
    return DerivationTrace(start, tuple(steps), Direction.PRODUCE)


def _lemma6_splits(alpha, beta) -> List[Tuple[str, str, str, str]]:
    splits = []
    for ident, a, tail, factor, head, b in LEMMA6_TEMPLATE:
        u1 = '00' + BLOCK * (alpha + a) + tail
        u2 = head + BLOCK * (beta - b)
        splits.append((ident, u1, factor, u2))
    return splits


def _lemma6(alpha, beta) -> DerivationTrace:
    start = block_word(alpha, '1000', beta)
    trace = _trace_from_splits(start, _lemma6_splits(alpha, beta))
    bad = validate_trace(builtin_r01(), trace)
    if bad is not None:
        log.warning(f"pumping chain (α={alpha}, β={beta}) fails at step {bad}")
    return trace


def lemma6_chain(alpha, beta) -> DerivationTrace:
    """
    The 16-step chain 00(1100)^α 1000 (1100)^β ⊣* 00(1100)^{α+9} 1000 (1100)^{β-1}.

    Raises:
        InvalidParametersError: unless α >= 1 and β >= 1
    """
    if alpha < 1 or beta < 1:
        raise InvalidParametersError(f"lemma6_chain needs α ≥ 1 and β ≥ 1, got α={alpha}, β={beta}")
    return _lemma6(alpha, beta)


def _corollary5(beta) -> DerivationTrace:
    trace = empty_trace(block_word(0, '1000', beta), Direction.PRODUCE)
    for i in range(beta):
        trace = trace.then(_lemma6(9 * i, beta - i))
    return trace


def corollary5_chain(beta) -> DerivationTrace:
    """
    001000(1100)^β ⊣* 00(1100)^{9β} 1000 in 16β steps.

    Raises:
        InvalidParametersError: unless β >= 1
    """
    if beta < 1:
        raise InvalidParametersError(f"corollary5_chain needs β ≥ 1, got β={beta}")
    return _corollary5(beta)


def level_blocks(k) -> int:
    """N_k = (2·9^k - 2)/4, exact."""
    return (2 * 9 ** k - 2) // 4


def _closing(m) -> DerivationTrace:
    p = '00' + BLOCK * m
    start = word(p + '1000')
    return _trace_from_splits(start, [(ident, p + tail, factor, u2) for ident, tail, factor, u2 in CLOSING_TEMPLATE])


def closing_chain(m) -> DerivationTrace:
    """
    The six-step chain 00(1100)^m 1000 ⊣* 00(1100)^{m+4} that ends every level.

    Raises:
        InvalidParametersError: if m < 0
    """
    if m < 0:
        raise InvalidParametersError(f"closing_chain needs m ≥ 0, got m={m}")
    return _closing(m)


def corollary7_derivation(k) -> DerivationTrace:
    """
    A produce trace ε ⊣* 00(1100)^{N_k}.

    Raises:
        InvalidParametersError: if k < 0 or k > 6
    """
    if k < 0 or k > MAX_LEVEL:
        raise InvalidParametersError(f"corollary7_derivation supports 0 ≤ k ≤ {MAX_LEVEL}, got {k}")

    seed = DerivationTrace(Word(), (TraceStep('0a', 1, word('00')),), Direction.PRODUCE)
    trace = seed
    for level in range(k):
        n = level_blocks(level)
        front = _trace_from_splits(trace.final, [
            ('1a', '', '10', '00' + BLOCK * n),
            ('1b', '', '00', '1000' + BLOCK * n),
        ])
        trace = trace.then(front).then(_corollary5(n)).then(_closing(9 * n))
        log.debug(f"corollary7 level {level + 1}: {len(trace.steps)} steps, |w| = {len(trace.final)}")

    bad = validate_trace(builtin_r01(), trace)
    if bad is not None:
        log.warning(f"level derivation (k={k}) fails at step {bad}")
    return trace
