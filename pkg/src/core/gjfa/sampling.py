"""Seeded random GJFA for cross-checking the two membership engines."""

import random

from ..words import Alphabet, Word
from .machine import Gjfa, Rule


def random_gjfa(rng: random.Random, alphabet=Alphabet.of('a', 'b'),
                max_states=3, max_rules=4, max_label=2) -> Gjfa:
    """
    Draw one small machine.

    State count, rule count (0..max_rules), label lengths (0..max_label, so ε labels
    occur) and the final set are all drawn from `rng`.
    """
    count = rng.randint(1, max_states)
    states = tuple(f"q{i}" for i in range(count))
    rules = []
    for _ in range(rng.randint(0, max_rules)):
        label = Word(tuple(rng.choice(alphabet.symbols) for _ in range(rng.randint(0, max_label))))
        rules.append(Rule(rng.choice(states), label, rng.choice(states)))
    finals = frozenset(s for s in states if rng.random() < 0.5)
    return Gjfa(states, alphabet, tuple(rules), states[0], finals)


def machine_pool(seed, size, **limits):
    """`size` machines drawn from a Random seeded with `seed`."""
    rng = random.Random(seed)
    return [random_gjfa(rng, **limits) for _ in range(size)]
