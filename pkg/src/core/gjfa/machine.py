"""
General Jumping Finite Automata - Data Model

A GJFA is (Q, Σ, R, s, F) with rules R ⊆ Q × Σ* × Q. A step from state r to state
q with rule (r, v, q) deletes one occurrence of the factor v anywhere in the current
word; ε labels are allowed. A word is accepted when some computation from the start
state ends in a final state with the empty word.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, List, Tuple

from ..errors import MachineDefinitionError
from ..words import Alphabet, Word, check_symbol, delete_at


@dataclass(frozen=True)
class Rule:
    """A transition (source, label, target); the label is deleted as a factor."""
    source: str
    label: Word
    target: str

    def __str__(self):
        return f"{self.source} -[{self.label.text()}]-> {self.target}"


@dataclass(frozen=True)
class Gjfa:
    states: Tuple[str, ...]
    alphabet: Alphabet
    rules: Tuple[Rule, ...]
    start: str
    finals: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, 'states', tuple(self.states))
        object.__setattr__(self, 'rules', tuple(self.rules))
        object.__setattr__(self, 'finals', frozenset(self.finals))

        for state in self.states:
            check_symbol(state)
        if len(set(self.states)) != len(self.states):
            raise MachineDefinitionError("duplicate state name")
        known = set(self.states)
        if self.start not in known:
            raise MachineDefinitionError(f"start state {self.start!r} is not a declared state")
        for final in self.finals:
            if final not in known:
                raise MachineDefinitionError(f"final state {final!r} is not a declared state")
        for rule in self.rules:
            if rule.source not in known or rule.target not in known:
                raise MachineDefinitionError(f"rule {rule} uses an undeclared state")
            if not self.alphabet.covers(rule.label):
                raise MachineDefinitionError(f"rule {rule} has a label outside the alphabet")


@dataclass(frozen=True)
class WitnessStep:
    rule: Rule
    position: int


@dataclass(frozen=True)
class AcceptWitness:
    """
    An accepting computation: the rules applied, in order, and the 1-indexed
    position of the deleted occurrence in the word current at each step.
    """
    steps: Tuple[WitnessStep, ...] = ()

    def replay(self, w) -> List[Word]:
        """
        Words visited by the computation, starting with `w`.

        Raises:
            InvalidPositionError: if a step's label does not occur at its position
        """
        words = [Word(w.symbols if isinstance(w, Word) else tuple(w))]
        for step in self.steps:
            words.append(delete_at(words[-1], step.rule.label, step.position))
        return words

    def labels(self) -> List[Word]:
        return [step.rule.label for step in self.steps]

    def is_valid_for(self, machine, w):
        """True if replaying yields ε along a start-to-final path of `machine`."""
        state = machine.start
        for step in self.steps:
            if step.rule not in machine.rules or step.rule.source != state:
                return False
            state = step.rule.target
        if state not in machine.finals:
            return False
        try:
            return len(self.replay(w)[-1]) == 0
        except Exception:
            return False
