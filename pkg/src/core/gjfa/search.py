"""
GJFA Membership, Enumeration and Bounded Universality Refutation

accepts():
    Depth-first search over configurations (state, current word) from (start, w).
    Rules are tried in declaration order and deletion positions in ascending order,
    so the returned witness is deterministic. Visited configurations are never
    expanded twice, which keeps ε-rule cycles finite.

enumerate_words():
    The generative reading: closure backwards from (f, ε) for every final f,
    inserting rule labels, capped at maxlen. Exactly the accepted words up to maxlen.

refute_universality():
    The shortlex-least word up to maxlen that is not accepted, if any. Universality
    itself is undecidable; this only searches a finite slice.
"""

from collections import defaultdict, deque
from typing import Optional, Tuple

from ..logger import log
from ..words import Word, all_words, as_tuple, shortlex
from ..words.insertion import _insertions, _occurrences
from .machine import AcceptWitness, WitnessStep


def accepts(machine, w) -> Tuple[bool, Optional[AcceptWitness]]:
    """
    Decide whether `machine` accepts `w`.

    Returns:
        (True, witness) or (False, None)

    Raises:
        AlphabetMismatchError: if w uses a symbol outside the machine's alphabet
    """
    start_word = as_tuple(w)
    machine.alphabet.require(start_word)

    outgoing = defaultdict(list)
    for rule in machine.rules:
        outgoing[rule.source].append((rule, as_tuple(rule.label)))

    finals = machine.finals
    visited = set()
    path = []

    # explicit stack of iterators keeps deep ε-chains off the Python call stack
    def successors(state, current):
        for rule, label in outgoing[state]:
            if not label:
                yield rule, 1, current
                continue
            size = len(label)
            for i in _occurrences(current, label):
                yield rule, i + 1, current[:i] + current[i + size:]

    root = (machine.start, start_word)
    visited.add(root)
    if root[0] in finals and not root[1]:
        return True, AcceptWitness(())

    stack = [successors(*root)]
    while stack:
        try:
            rule, position, nxt = next(stack[-1])
        except StopIteration:
            stack.pop()
            if path:
                path.pop()
            continue
        config = (rule.target, nxt)
        if config in visited:
            continue
        visited.add(config)
        path.append(WitnessStep(rule, position))
        if not nxt and rule.target in finals:
            log.debug(f"accepts: {len(visited)} configurations visited, accepted")
            return True, AcceptWitness(tuple(path))
        stack.append(successors(*config))

    log.debug(f"accepts: {len(visited)} configurations visited, rejected")
    return False, None


def _accepted_tuples(machine, maxlen):
    into = defaultdict(list)
    for rule in machine.rules:
        into[rule.target].append((rule.source, as_tuple(rule.label)))

    reached = set()
    queue = deque()
    for final in machine.finals:
        reached.add((final, ()))
        queue.append((final, ()))

    while queue:
        state, current = queue.popleft()
        for source, label in into[state]:
            if len(current) + len(label) > maxlen:
                continue
            for bigger in _insertions(current, label):
                config = (source, bigger)
                if config not in reached:
                    reached.add(config)
                    queue.append(config)

    log.debug(f"enumerate: {len(reached)} configurations up to length {maxlen}")
    return {current for state, current in reached if state == machine.start}


def enumerate_words(machine, maxlen):
    """All words of length <= maxlen accepted by `machine`, in shortlex order."""
    return shortlex(_accepted_tuples(machine, maxlen), machine.alphabet)


def refute_universality(machine, maxlen) -> Optional[Word]:
    """
    The shortlex-least word of length <= maxlen that `machine` rejects, or None when
    every such word is accepted. ε is examined first.
    """
    accepted = _accepted_tuples(machine, maxlen)
    for candidate in all_words(machine.alphabet, maxlen):
        if candidate.symbols not in accepted:
            return candidate
    return None
