"""
Built-in Rewriting Systems

R_01:  a 2-clearing restarting automaton over {0, 1} with nine instructions in four
       types. Type 0 builds the seed word, type 1 works at the left end, type 2 in the
       interior and type 3 at the right end.

R_uV:  a 1-context rewriting system over {u, V}, the image of R_01 under φ.

Both are addressable from the CLI as builtin:R01 and builtin:RuV.
"""

from functools import lru_cache

from ..words import EPSILON, Alphabet, word
from ..rewriting import ClearingRA, ContextRewritingSystem, Instruction


BINARY = Alphabet.of('0', '1')
UV = Alphabet.of('u', 'V')


def _clearing(ident, left, v, right):
    """Build a clearing instruction from compact strings; '^' / '$' mark sentinels."""
    left_anchored = left.startswith('^')
    right_anchored = right.endswith('$')
    return Instruction(
        id=ident,
        left=word(left.lstrip('^')),
        rule_from=word(v),
        rule_to=EPSILON,
        right=word(right.rstrip('$')),
        left_anchored=left_anchored,
        right_anchored=right_anchored,
    )


@lru_cache(maxsize=None)
def builtin_r01() -> ClearingRA:
    return ClearingRA.of(BINARY, 2, (
        _clearing('0a', '^', '00', '$'),
        _clearing('1a', '^', '10', '00'),
        _clearing('1b', '^', '00', '10'),
        _clearing('2a', '01', '10', '00'),
        _clearing('2b', '00', '11', '01'),
        _clearing('2c', '11', '00', '10'),
        _clearing('2d', '10', '01', '11'),
        _clearing('3a', '01', '10', '0$'),
        _clearing('3b', '00', '11', '0$'),
    ))


@lru_cache(maxsize=None)
def builtin_ruv() -> ContextRewritingSystem:
    return ContextRewritingSystem(UV, UV, 1, (
        Instruction('0', EPSILON, EPSILON, word('uu'), EPSILON, left_anchored=True, right_anchored=True),
        Instruction('1', EPSILON, word('u'), word('uuV'), EPSILON, left_anchored=True),
        Instruction('2', EPSILON, word('Vu'), word('uuuV'), EPSILON),
        Instruction('3', EPSILON, word('Vu'), word('uuuu'), EPSILON, right_anchored=True),
    ))


BUILTINS = {
    'R01': builtin_r01,
    'RuV': builtin_ruv,
}
