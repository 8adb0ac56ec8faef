"""
GJFA Module - General Jumping Finite Automata

Public API:
    Gjfa, Rule, AcceptWitness, WitnessStep   data model
    accepts()                                 membership with a replayable witness
    enumerate_words()                         accepted words up to a length bound
    refute_universality()                     shortlex-least rejected word up to a bound
    random_gjfa(), machine_pool()             seeded sampling for cross-checks
"""

from .machine import AcceptWitness, Gjfa, Rule, WitnessStep
from .search import accepts, enumerate_words, refute_universality
from .sampling import machine_pool, random_gjfa

__all__ = [
    'AcceptWitness', 'Gjfa', 'Rule', 'WitnessStep',
    'accepts', 'enumerate_words', 'refute_universality',
    'machine_pool', 'random_gjfa',
]
