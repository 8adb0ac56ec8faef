"""
Context Rewriting Systems and Clearing Restarting Automata - Data Model

An instruction (u_L, v -> t, u_R) rewrites w = u_1 v u_2 into u_1 t u_2 when u_L is a
suffix of ¢u_1 and u_R is a prefix of u_2$. Contexts shorter than k (including the
empty context) are allowed and simply constrain less. A context that carries a
sentinel pins the rewrite to the word boundary: (¢x) requires u_1 = x exactly, (y$)
requires u_2 = y exactly.

A clearing restarting automaton is the special case Γ = Σ, t = ε and v ≠ ε.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Tuple

from ..errors import MachineDefinitionError
from ..words import EPSILON, Alphabet, Word


class Direction(str, Enum):
    """REDUCE replays rewrites left to right (⊢, →); PRODUCE replays them backwards (⊣)."""
    REDUCE = 'reduce'
    PRODUCE = 'produce'


@dataclass(frozen=True)
class Instruction:
    id: str
    left: Word
    rule_from: Word
    rule_to: Word = EPSILON
    right: Word = EPSILON
    left_anchored: bool = False
    right_anchored: bool = False

    @property
    def left_width(self):
        return len(self.left) + (1 if self.left_anchored else 0)

    @property
    def right_width(self):
        return len(self.right) + (1 if self.right_anchored else 0)

    @property
    def is_clearing(self):
        return len(self.rule_to) == 0 and len(self.rule_from) > 0

    def context_fits(self, u1, u2):
        """Do the contexts accept the split u_1 | u_2 (symbol tuples)?"""
        left = self.left.symbols
        if self.left_anchored:
            if u1 != left:
                return False
        elif left and (len(u1) < len(left) or u1[len(u1) - len(left):] != left):
            return False

        right = self.right.symbols
        if self.right_anchored:
            return u2 == right
        return not right or u2[:len(right)] == right

    def __str__(self):
        left = ('¢' if self.left_anchored else '') + ''.join(self.left.symbols)
        right = ''.join(self.right.symbols) + ('$' if self.right_anchored else '')
        rule = str(self.rule_from) if self.is_clearing else f"{self.rule_from} -> {self.rule_to}"
        return f"{self.id}: ({left or 'ε'}, {rule}, {right or 'ε'})"


@dataclass(frozen=True)
class ContextRewritingSystem:
    sigma: Alphabet
    gamma: Alphabet
    k: int
    instructions: Tuple[Instruction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'instructions', tuple(self.instructions))
        if self.k < 0:
            raise MachineDefinitionError("context width k must be non-negative")
        if not self.sigma.issubset(self.gamma):
            raise MachineDefinitionError("input alphabet must be contained in the working alphabet")
        ids = [i.id for i in self.instructions]
        if len(set(ids)) != len(ids):
            raise MachineDefinitionError("instruction ids must be unique")
        for instr in self.instructions:
            for part in (instr.left, instr.rule_from, instr.rule_to, instr.right):
                if not self.gamma.covers(part):
                    raise MachineDefinitionError(f"instruction {instr.id} uses a symbol outside Γ")
            if instr.left_width > self.k or instr.right_width > self.k:
                raise MachineDefinitionError(f"instruction {instr.id} has a context longer than k = {self.k}")

    def instruction(self, ident) -> Instruction:
        for instr in self.instructions:
            if instr.id == ident:
                return instr
        raise MachineDefinitionError(f"no instruction named {ident!r}")

    @property
    def is_clearing(self):
        return set(self.sigma) == set(self.gamma) and all(i.is_clearing for i in self.instructions)


@dataclass(frozen=True)
class ClearingRA(ContextRewritingSystem):
    """A k-clearing restarting automaton: Γ = Σ and every instruction erases v ∈ Σ+."""

    def __post_init__(self):
        super().__post_init__()
        if set(self.sigma) != set(self.gamma):
            raise MachineDefinitionError("a clearing restarting automaton has Γ = Σ")
        for instr in self.instructions:
            if not instr.is_clearing:
                raise MachineDefinitionError(f"instruction {instr.id} is not clearing (needs v ≠ ε, t = ε)")

    @classmethod
    def of(cls, sigma, k, instructions):
        return cls(sigma, sigma, k, tuple(instructions))


@dataclass(frozen=True)
class TraceStep:
    instruction_id: str
    position: int
    word: Word


@dataclass(frozen=True)
class DerivationTrace:
    """A certificate: the start word and every single step with its resulting word."""
    start: Word
    steps: Tuple[TraceStep, ...] = field(default_factory=tuple)
    direction: Direction = Direction.REDUCE

    def __post_init__(self):
        object.__setattr__(self, 'steps', tuple(self.steps))

    @property
    def final(self) -> Word:
        return self.steps[-1].word if self.steps else self.start

    def words(self) -> List[Word]:
        return [self.start] + [step.word for step in self.steps]

    def then(self, other: 'DerivationTrace') -> 'DerivationTrace':
        """Concatenate two traces of the same direction (other must start where self ends)."""
        if other.direction != self.direction or other.start != self.final:
            raise MachineDefinitionError("traces do not connect")
        return DerivationTrace(self.start, self.steps + other.steps, self.direction)

    def replace_word(self, index, new_word) -> 'DerivationTrace':
        steps = list(self.steps)
        old = steps[index]
        steps[index] = TraceStep(old.instruction_id, old.position, new_word)
        return DerivationTrace(self.start, tuple(steps), self.direction)


def empty_trace(start, direction=Direction.REDUCE) -> DerivationTrace:
    return DerivationTrace(start, (), direction)
