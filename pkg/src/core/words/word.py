"""
Symbols, Words and Alphabets

Purpose:
    The value types every engine in the toolkit trades in. A Word is an immutable
    sequence of symbol names; an Alphabet is an ordered, duplicate-free set of
    symbol names whose declaration order fixes the shortlex order of words.

Text Conventions:
    - Symbols are written as whitespace-separated tokens: "a S βS".
    - The single token "_" denotes the empty word ε.
    - When every symbol of an alphabet is one character long, words may also be
      written compactly ("100110").

Positions:
    The engines use 1-indexed positions, matching the slice notation w[k..]
    used for words. Python indexing on Word (w[0], w[1:3]) stays 0-based.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from ..errors import AlphabetMismatchError, InvalidSymbolError


EPSILON_TOKEN = '_'
LEFT_SENTINEL = '^'
RIGHT_SENTINEL = '$'

# Tokens with a meaning in the text formats; no symbol may be named like them
RESERVED_TOKENS = frozenset({'^', '$', '_', '#', '|', '->', '/'})


def check_symbol(name):
    """
    Validate a symbol name.

    Raises:
        InvalidSymbolError: if the name is empty, contains whitespace or '#',
                            or equals a reserved token
    """
    if not isinstance(name, str) or not name:
        raise InvalidSymbolError(f"symbol names must be non-empty strings, got {name!r}")
    if any(ch.isspace() for ch in name):
        raise InvalidSymbolError(f"symbol {name!r} contains whitespace")
    if '#' in name:
        raise InvalidSymbolError(f"symbol {name!r} contains the comment marker '#'")
    if name in RESERVED_TOKENS:
        raise InvalidSymbolError(f"symbol {name!r} is a reserved token")
    return name


@dataclass(frozen=True)
class Word:
    """An immutable word; the empty tuple is ε."""

    symbols: Tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, 'symbols', tuple(self.symbols))

    @classmethod
    def of(cls, *symbols):
        return cls(tuple(symbols))

    @classmethod
    def parse(cls, text, alphabet=None):
        """
        Parse a word from its text form.

        Args:
            text: "_" or "" for ε, whitespace-separated symbols, or a compact
                  string when `alphabet` has only one-character symbols
            alphabet: optional Alphabet; when given, every symbol is checked

        Raises:
            AlphabetMismatchError: a symbol is not in `alphabet`
            InvalidSymbolError: a token is not a valid symbol name
        """
        tokens = text.split()
        if not tokens or tokens == [EPSILON_TOKEN]:
            return cls()

        if (len(tokens) == 1 and alphabet is not None and alphabet.single_char
                and tokens[0] not in alphabet):
            tokens = list(tokens[0])

        for token in tokens:
            check_symbol(token)
        word = cls(tuple(tokens))
        if alphabet is not None:
            alphabet.require(word)
        return word

    def text(self):
        """Whitespace-separated form used by every file format ("_" for ε)."""
        return ' '.join(self.symbols) if self.symbols else EPSILON_TOKEN

    def __str__(self):
        if not self.symbols:
            return 'ε'
        if all(len(s) == 1 for s in self.symbols):
            return ''.join(self.symbols)
        return ' '.join(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __bool__(self):
        return bool(self.symbols)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.symbols[index])
        return self.symbols[index]

    def __add__(self, other):
        if isinstance(other, Word):
            return Word(self.symbols + other.symbols)
        return Word(self.symbols + tuple(other))

    def factors(self, length):
        """All factors of the given length, left to right (with repeats)."""
        return [Word(self.symbols[i:i + length]) for i in range(len(self.symbols) - length + 1)]


EPSILON = Word()


def word(text):
    """
    Shorthand constructor: "a S βS" splits on whitespace, "0100" splits into
    characters, "" and "_" give ε.
    """
    if text.strip() in ('', EPSILON_TOKEN):
        return EPSILON
    if any(ch.isspace() for ch in text):
        return Word.parse(text)
    return Word(tuple(check_symbol(ch) for ch in text))


@dataclass(frozen=True)
class Alphabet:
    """
    An ordered finite set of symbols.

    Declaration order is the letter order of shortlex comparisons.
    """

    symbols: Tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, 'symbols', symbols)
        for name in symbols:
            check_symbol(name)
        if len(set(symbols)) != len(symbols):
            raise InvalidSymbolError(f"duplicate symbol in alphabet {' '.join(symbols)}")
        object.__setattr__(self, '_ranks', {name: i for i, name in enumerate(symbols)})

    @classmethod
    def of(cls, *symbols):
        return cls(tuple(symbols))

    def __contains__(self, symbol):
        return symbol in self._ranks

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    @property
    def single_char(self):
        return all(len(s) == 1 for s in self.symbols)

    def covers(self, w):
        return all(s in self._ranks for s in w)

    def require(self, w):
        """Raise AlphabetMismatchError naming the first foreign symbol of w."""
        for s in w:
            if s not in self._ranks:
                raise AlphabetMismatchError(f"symbol {s!r} is not in the alphabet {{{' '.join(self.symbols)}}}")
        return w

    def issubset(self, other):
        return all(s in other for s in self.symbols)

    def union(self, *others):
        merged = list(self.symbols)
        for other in others:
            merged.extend(s for s in other if s not in merged)
        return Alphabet(tuple(merged))

    def key(self, w):
        """Shortlex sort key of a Word or symbol tuple."""
        ranks = self._ranks
        return (len(w), tuple(ranks[s] for s in w))


def shortlex_key(w, alphabet=None):
    """Shortlex key; without an alphabet, symbols compare by name."""
    if alphabet is not None:
        return alphabet.key(w)
    return (len(w), tuple(w))


def shortlex(words, alphabet=None):
    """Deduplicate and sort words (Word or symbol tuples) into shortlex order as Words."""
    unique = {w.symbols if isinstance(w, Word) else tuple(w) for w in words}
    return [Word(s) for s in sorted(unique, key=lambda s: shortlex_key(s, alphabet))]


def all_words(alphabet, maxlen) -> List[Word]:
    """Every word over `alphabet` of length <= maxlen, in shortlex order."""
    result = [EPSILON]
    layer: List[Tuple[str, ...]] = [()]
    for _ in range(maxlen):
        layer = [prefix + (s,) for prefix in layer for s in alphabet.symbols]
        result.extend(Word(s) for s in layer)
    return result


def as_tuple(w: Optional[Iterable[str]]):
    if w is None:
        return ()
    if isinstance(w, Word):
        return w.symbols
    return tuple(w)
