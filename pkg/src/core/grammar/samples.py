"""Small GNF grammars used by the verification suites and the tests."""

from ..words import Alphabet, word
from .gnf import GnfGrammar, Production


def grammar_a() -> GnfGrammar:
    """G_a: S -> a S | a, the language a+."""
    return GnfGrammar(Alphabet.of('a'), ('S',), 'S', (
        Production('S', word('a S')),
        Production('S', word('a')),
    ))


def grammar_ab() -> GnfGrammar:
    """G_ab: S -> a B, B -> b, the single word ab."""
    return GnfGrammar(Alphabet.of('a', 'b'), ('S', 'B'), 'S', (
        Production('S', word('a B')),
        Production('B', word('b')),
    ))


def grammar_full() -> GnfGrammar:
    """G_full: S -> a S | b S | a | b, every non-empty word over {a, b}."""
    return GnfGrammar(Alphabet.of('a', 'b'), ('S',), 'S', (
        Production('S', word('a S')),
        Production('S', word('b S')),
        Production('S', word('a')),
        Production('S', word('b')),
    ))


SAMPLE_GRAMMARS = {
    'G_a': grammar_a,
    'G_ab': grammar_ab,
    'G_full': grammar_full,
}
