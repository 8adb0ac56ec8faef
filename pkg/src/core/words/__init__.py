"""
Words Module - Symbols, Words, Alphabets and the Insertion Calculus

Public API:
    Word, Alphabet, EPSILON, word()        value types and a parsing shorthand
    shortlex(), all_words()                canonical ordering and enumeration
    occurrences(), delete_at(), insert_at(), insertions(),
    insert_power(), insert_closure(), insertion_chain(), project()
"""

from .word import (
    EPSILON,
    EPSILON_TOKEN,
    LEFT_SENTINEL,
    RESERVED_TOKENS,
    RIGHT_SENTINEL,
    Alphabet,
    Word,
    all_words,
    as_tuple,
    check_symbol,
    shortlex,
    shortlex_key,
    word,
)
from .insertion import (
    delete_at,
    insert_at,
    insert_closure,
    insert_power,
    insertion_chain,
    insertions,
    occurrences,
    project,
)

__all__ = [
    'EPSILON', 'EPSILON_TOKEN', 'LEFT_SENTINEL', 'RIGHT_SENTINEL', 'RESERVED_TOKENS',
    'Alphabet', 'Word', 'all_words', 'as_tuple', 'check_symbol', 'shortlex', 'shortlex_key', 'word',
    'delete_at', 'insert_at', 'insert_closure', 'insert_power', 'insertion_chain',
    'insertions', 'occurrences', 'project',
]
