"""
The φ Morphism, the Filter K and the Potential Φ

φ maps a binary word to a {u, V} word of the same length: an interior position k
becomes V when its neighbours x_{k-1} and x_{k+1} are equal, every other position
becomes u. K is the regular set of binary words without the factors 000, 010, 101,
111, i.e. exactly the words whose image under φ is all u's.

Φ assigns a potential to {u, V} words: Φ(ε) = 0, Φ(u w) = 1 + Φ(w),
Φ(V w) = 1 + 3 Φ(w). R_uV rule 0 creates potential 2, rule 1 triples it, rules 2
and 3 keep it, and Φ of an all-u word is its length.
"""

from typing import Optional, Tuple

from ..words import Word, as_tuple
from ..rewriting import applicable, apply
from .builtins import BINARY, UV, builtin_ruv


FORBIDDEN = frozenset({('0', '0', '0'), ('0', '1', '0'), ('1', '0', '1'), ('1', '1', '1')})


def phi(w) -> Word:
    x = as_tuple(w)
    BINARY.require(x)
    n = len(x)
    return Word(tuple(
        'V' if 0 < k < n - 1 and x[k - 1] == x[k + 1] else 'u'
        for k in range(n)
    ))


def in_k(w) -> bool:
    x = as_tuple(w)
    BINARY.require(x)
    return all(x[i:i + 3] not in FORBIDDEN for i in range(len(x) - 2))


def potential(w) -> int:
    value = 0
    for symbol in reversed(as_tuple(w)):
        UV.require((symbol,))
        value = 1 + 3 * value if symbol == 'V' else 1 + value
    return value


def is_all_u(w) -> bool:
    return all(s == 'u' for s in as_tuple(w))


def simulate_step(u, v) -> Optional[Tuple[str, int]]:
    """
    The R_uV instruction and position rewriting φ(u) into φ(v) in one step, or None.
    """
    source, target = phi(u), phi(v)
    system = builtin_ruv()
    for instr, position in applicable(system, source):
        if apply(system, source, instr, position) == target:
            return instr.id, position
    return None
