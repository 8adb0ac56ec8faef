"""
Line-based Reading Helpers Shared by Every Text Format

All formats are UTF-8 plain text:
    - '#' starts a comment that runs to the end of the line
    - blank lines are ignored
    - the first significant line is a header naming the format
    - every other line is `key: tokens...` with whitespace-separated tokens

Errors are FormatError carrying the 1-based line number of the offending line.
"""

from contextlib import contextmanager
from typing import Iterator, List, Tuple

from ..errors import FormatError, ToolkitError
from ..words import EPSILON, EPSILON_TOKEN, Word, check_symbol


Line = Tuple[int, str]


def significant_lines(text) -> Iterator[Line]:
    """(line number, content) for every line that is not blank after removing comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].strip()
        if content:
            yield number, content


def split_header(text, kinds) -> Tuple[Line, List[str], List[Line]]:
    """
    Separate the header line from the body.

    Returns:
        (header line, header tokens, remaining lines)

    Raises:
        FormatError: empty file, or a header that is not one of `kinds`
    """
    lines = list(significant_lines(text))
    if not lines:
        raise FormatError("file is empty")
    header = lines[0]
    tokens = header[1].split()
    if tokens[0] not in kinds:
        raise FormatError(f"expected a '{' | '.join(kinds)}' header, got {header[1]!r}", header[0])
    return header, tokens, lines[1:]


def key_value(line) -> Tuple[str, List[str]]:
    number, content = line
    key, sep, value = content.partition(':')
    if not sep:
        raise FormatError(f"expected 'key: value', got {content!r}", number)
    return key.strip(), value.split()


def symbols_from(tokens, number) -> Tuple[str, ...]:
    with at_line(number):
        return tuple(check_symbol(t) for t in tokens)


def word_from(tokens, number) -> Word:
    """'_' alone (or nothing) is ε; otherwise every token is a symbol."""
    if not tokens or tokens == [EPSILON_TOKEN]:
        return EPSILON
    return Word(symbols_from(tokens, number))


def single(tokens, number, key) -> str:
    if len(tokens) != 1:
        raise FormatError(f"'{key}:' takes exactly one name, got {len(tokens)}", number)
    with at_line(number):
        return check_symbol(tokens[0])


@contextmanager
def at_line(number):
    """Re-raise toolkit errors from the enclosed block as FormatError at `number`."""
    try:
        yield
    except FormatError:
        raise
    except ToolkitError as e:
        raise FormatError(str(e), number) from e


class Fields:
    """Collects the one-per-file `key:` lines and reports duplicates and omissions."""

    def __init__(self, kind):
        self.kind = kind
        self._values = {}

    def put(self, key, tokens, number):
        if key in self._values:
            raise FormatError(f"duplicate '{key}:' line", number)
        self._values[key] = (number, tokens)

    def get(self, key) -> Tuple[int, List[str]]:
        if key not in self._values:
            raise FormatError(f"{self.kind} file has no '{key}:' line")
        return self._values[key]
