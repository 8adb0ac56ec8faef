"""
Insertion / Deletion Calculus

Purpose:
    Factor occurrences, deletion of a factor at a position, insertion of a word at a
    position, and the finite fragments of the insertion operator L <- K that the
    engines need:

        insertions(h, v)          = h <- v              (one insertion)
        insert_power(h, K, k)     = h <-^k K            (exactly k insertions)
        insert_closure(h, K, n)   = (h <-* K) ∩ Σ^{<=n} (length-bounded closure)
        insertion_chain(h, vs)    = h <- v_1 <- ... <- v_d (evaluated from the left)

    All positions are 1-indexed. Every function returns new words; inputs are never
    modified. Sets of words are returned as lists in shortlex order.
"""

from typing import List, Sequence

from ..errors import InvalidPositionError
from .word import Word, as_tuple, shortlex


def _occurrences(host, piece):
    """0-based start indices of `piece` in `host` (both symbol tuples)."""
    n, m = len(host), len(piece)
    if m == 0:
        return list(range(n + 1))
    first = piece[0]
    return [i for i in range(n - m + 1) if host[i] == first and host[i:i + m] == piece]


def _insertions(host, piece):
    """Distinct symbol tuples host[:i] + piece + host[i:] (unordered)."""
    return {host[:i] + piece + host[i:] for i in range(len(host) + 1)}


def occurrences(host, piece) -> List[int]:
    """
    All 1-indexed start positions of `piece` as a factor of `host`.

    Overlapping occurrences are included; ε occurs at every position 1..|host|+1.

    Example:
        occurrences(word('a a a'), word('a a'))  ->  [1, 2]
    """
    return [i + 1 for i in _occurrences(as_tuple(host), as_tuple(piece))]


def delete_at(host, piece, position) -> Word:
    """
    Remove the occurrence of `piece` starting at `position`.

    Raises:
        InvalidPositionError: if `piece` does not occur at `position`
    """
    h, p = as_tuple(host), as_tuple(piece)
    i = position - 1
    if i < 0 or i > len(h) or h[i:i + len(p)] != p or i + len(p) > len(h):
        raise InvalidPositionError(f"{Word(p)} does not occur at position {position} of {Word(h)}")
    return Word(h[:i] + h[i + len(p):])


def insert_at(host, piece, position) -> Word:
    """
    Insert `piece` so that it starts at `position` (1 <= position <= |host|+1).

    Raises:
        InvalidPositionError: if position is out of range
    """
    h, p = as_tuple(host), as_tuple(piece)
    if not 1 <= position <= len(h) + 1:
        raise InvalidPositionError(f"position {position} is outside 1..{len(h) + 1}")
    i = position - 1
    return Word(h[:i] + p + h[i:])


def insertions(host, piece, alphabet=None) -> List[Word]:
    """The set host <- piece, in shortlex order."""
    return shortlex(_insertions(as_tuple(host), as_tuple(piece)), alphabet)


def insert_power(seed, pieces: Sequence, times, alphabet=None) -> List[Word]:
    """The set seed <-^times pieces (exactly `times` insertions), in shortlex order."""
    layer = {as_tuple(seed)}
    tuples = [as_tuple(p) for p in pieces]
    for _ in range(times):
        layer = {y for x in layer for p in tuples for y in _insertions(x, p)}
    return shortlex(layer, alphabet)


def insert_closure(seed, pieces: Sequence, maxlen, alphabet=None) -> List[Word]:
    """
    All words of length <= maxlen obtainable from `seed` by repeated insertion of
    members of `pieces`, in shortlex order.
    """
    start = as_tuple(seed)
    tuples = [as_tuple(p) for p in pieces]
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for x in frontier:
            for p in tuples:
                if len(x) + len(p) > maxlen:
                    continue
                for y in _insertions(x, p):
                    if y not in seen:
                        seen.add(y)
                        next_frontier.append(y)
        frontier = next_frontier
    return shortlex(seen, alphabet)


def insertion_chain(seed, pieces: Sequence, alphabet=None) -> List[Word]:
    """
    Evaluate seed <- v_1 <- v_2 <- ... <- v_d from the left.

    With seed = ε and pieces = (v_d, ..., v_1) this is the set of words a GJFA
    accepts along a path labelled v_1, ..., v_d.
    """
    layer = {as_tuple(seed)}
    for piece in pieces:
        p = as_tuple(piece)
        layer = {y for x in layer for y in _insertions(x, p)}
    return shortlex(layer, alphabet)


def project(w, sub) -> Word:
    """Keep only the symbols of `w` that belong to `sub`, in order."""
    keep = set(sub)
    return Word(tuple(s for s in as_tuple(w) if s in keep))
