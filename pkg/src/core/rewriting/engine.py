"""
Rewriting Engine - Matching, Reduction, Production and Bounded Closures

Ordering:
    Instructions are considered in declaration order and positions in ascending order
    everywhere, so traces are deterministic. Sets of words are returned in shortlex
    order of the system's working alphabet.

Reduction vs. production:
    apply() rewrites u_1 v u_2 into u_1 t u_2. produce_step() inverts one such step:
    it returns every word that rewrites to the given one in a single step. For a
    clearing automaton this is exactly insertion of v at a split whose contexts fit.
"""

from collections import deque
from typing import List, Optional, Tuple

from ..errors import NotApplicableError
from ..logger import log
from ..words import Word, as_tuple, shortlex
from ..words.insertion import _occurrences
from .system import DerivationTrace, Direction, Instruction, TraceStep


def _resolve(system, instr) -> Instruction:
    return system.instruction(instr) if isinstance(instr, str) else instr


def _rewrites(system, w):
    """(instruction, 1-based position, result tuple) for every applicable rewrite of w."""
    for instr in system.instructions:
        v = instr.rule_from.symbols
        t = instr.rule_to.symbols
        size = len(v)
        for i in _occurrences(w, v):
            u1, u2 = w[:i], w[i + size:]
            if instr.context_fits(u1, u2):
                yield instr, i + 1, u1 + t + u2


def _preimages(system, u):
    """(instruction, 1-based position, predecessor tuple) for every word rewriting to u."""
    for instr in system.instructions:
        v = instr.rule_from.symbols
        t = instr.rule_to.symbols
        size = len(t)
        for i in _occurrences(u, t):
            u1, u2 = u[:i], u[i + size:]
            if instr.context_fits(u1, u2):
                yield instr, i + 1, u1 + v + u2


def applicable(system, w) -> List[Tuple[Instruction, int]]:
    """Every (instruction, position) whose rule and contexts match w."""
    return [(instr, position) for instr, position, _ in _rewrites(system, as_tuple(w))]


def apply(system, w, instr, position) -> Word:
    """
    Rewrite w with `instr` at `position`.

    Args:
        instr: an Instruction of `system` or its id

    Raises:
        NotApplicableError: if the instruction does not match at that position
    """
    instr = _resolve(system, instr)
    current = as_tuple(w)
    v = instr.rule_from.symbols
    i = position - 1
    if 0 <= i <= len(current) - len(v) and current[i:i + len(v)] == v:
        u1, u2 = current[:i], current[i + len(v):]
        if instr.context_fits(u1, u2):
            return Word(u1 + instr.rule_to.symbols + u2)
    raise NotApplicableError(f"instruction {instr.id} does not apply to {Word(current)} at position {position}")


def reduce_to_empty(system, w) -> Tuple[bool, Optional[DerivationTrace]]:
    """
    Decide w ⊢* ε for a clearing automaton, returning a reduction trace on success.

    Raises:
        AlphabetMismatchError: if w is not over Σ
    """
    start = as_tuple(w)
    system.sigma.require(start)
    if not start:
        return True, DerivationTrace(Word(), (), Direction.REDUCE)

    visited = {start}
    path: List[TraceStep] = []
    stack = [_rewrites(system, start)]
    while stack:
        try:
            instr, position, nxt = next(stack[-1])
        except StopIteration:
            stack.pop()
            if path:
                path.pop()
            continue
        if nxt in visited:
            continue
        visited.add(nxt)
        path.append(TraceStep(instr.id, position, Word(nxt)))
        if not nxt:
            log.debug(f"reduce_to_empty: {len(visited)} words visited, accepted")
            return True, DerivationTrace(Word(start), tuple(path), Direction.REDUCE)
        stack.append(_rewrites(system, nxt))

    log.debug(f"reduce_to_empty: {len(visited)} words visited, rejected")
    return False, None


def productions(system, u) -> List[Tuple[Instruction, int, Word]]:
    """Every single production u ⊣ v as (instruction, position of v's inserted factor, v)."""
    return [(instr, position, Word(v)) for instr, position, v in _preimages(system, as_tuple(u))]


def produce_step(system, u) -> List[Word]:
    """All v with v ⊢ u in one step, in shortlex order."""
    return shortlex((v for _, _, v in _preimages(system, as_tuple(u))), system.gamma)


def generate(system, maxlen) -> List[Word]:
    """
    The words of length <= maxlen that reduce to ε: the closure of {ε} under
    produce_step, capped at maxlen.
    """
    seen = {()}
    frontier = [()]
    while frontier:
        next_frontier = []
        for u in frontier:
            for _, _, v in _preimages(system, u):
                if len(v) <= maxlen and v not in seen:
                    seen.add(v)
                    next_frontier.append(v)
        frontier = next_frontier
    log.debug(f"generate: {len(seen)} words up to length {maxlen}")
    return shortlex(seen, system.gamma)


def forward_closure(system, seed, maxlen) -> List[Word]:
    """All words of length <= maxlen reachable from `seed` by rewriting."""
    start = as_tuple(seed)
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for w in frontier:
            for _, _, nxt in _rewrites(system, w):
                if len(nxt) <= maxlen and nxt not in seen:
                    seen.add(nxt)
                    next_frontier.append(nxt)
        frontier = next_frontier
    log.debug(f"forward_closure: {len(seen)} words up to length {maxlen}")
    return shortlex(seen, system.gamma)


def derive_from(system, seed, target, maxlen=None) -> Optional[DerivationTrace]:
    """
    Shortest rewriting trace from `seed` to `target` within words of length <= maxlen
    (default: the longer of the two), or None.

    Exact for systems whose rules never shrink a word when maxlen = |target|.
    """
    start, goal = as_tuple(seed), as_tuple(target)
    if maxlen is None:
        maxlen = max(len(start), len(goal))

    parent = {start: None}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        if w == goal:
            break
        for instr, position, nxt in _rewrites(system, w):
            if len(nxt) <= maxlen and nxt not in parent:
                parent[nxt] = (w, instr.id, position)
                queue.append(nxt)

    if goal not in parent:
        return None

    steps = []
    current = goal
    while parent[current] is not None:
        previous, ident, position = parent[current]
        steps.append(TraceStep(ident, position, Word(current)))
        current = previous
    return DerivationTrace(Word(start), tuple(reversed(steps)), Direction.REDUCE)


def validate_trace(system, trace) -> Optional[int]:
    """
    Replay a trace step by step.

    Returns:
        None when every recorded word is confirmed, otherwise the 0-based index of
        the first step that does not replay.
    """
    previous = trace.start
    for index, step in enumerate(trace.steps):
        try:
            if trace.direction == Direction.PRODUCE:
                ok = apply(system, step.word, step.instruction_id, step.position) == previous
            else:
                ok = apply(system, previous, step.instruction_id, step.position) == step.word
        except Exception as e:
            log.debug(f"trace step {index}: {e}")
            ok = False
        if not ok:
            return index
        previous = step.word
    return None
