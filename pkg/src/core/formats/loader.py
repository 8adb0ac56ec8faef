"""
Machine References

A machine reference is either `builtin:<name>` (resolved without touching the
filesystem) or a path to a text file whose header line picks the format:
`gjfa`, `gnf` or `crs k=N`.
"""

from pathlib import Path

from ..errors import FormatError, InvalidParametersError
from ..systems import BUILTINS
from .crs_format import parse_crs
from .gjfa_format import parse_gjfa
from .gnf_format import parse_gnf
from .lines import significant_lines


BUILTIN_PREFIX = 'builtin:'

PARSERS = {
    'gjfa': parse_gjfa,
    'gnf': parse_gnf,
    'crs': parse_crs,
}


def parse_machine(text):
    """Dispatch on the header line: a Gjfa, a GnfGrammar or a rewriting system."""
    for number, content in significant_lines(text):
        kind = content.split()[0]
        if kind not in PARSERS:
            raise FormatError(f"unknown format header {kind!r} (expected gjfa, gnf or crs)", number)
        return PARSERS[kind](text)
    raise FormatError("file is empty")


def load_machine(ref):
    """
    Resolve a machine reference.

    Raises:
        InvalidParametersError: unknown builtin name or missing file
        FormatError: the file does not parse
    """
    if ref.startswith(BUILTIN_PREFIX):
        name = ref[len(BUILTIN_PREFIX):]
        factory = BUILTINS.get(name)
        if factory is None:
            raise InvalidParametersError(f"unknown builtin {name!r} (available: {', '.join(BUILTINS)})")
        return factory()

    path = Path(ref)
    if not path.is_file():
        raise InvalidParametersError(f"no such machine file: {ref}")
    return parse_machine(read_source(path))


def read_source(path) -> str:
    """
    Read a machine or grammar file as UTF-8 text.

    Raises:
        FormatError: the file is not valid UTF-8
    """
    try:
        return Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise FormatError(f"{path} is not UTF-8 text (byte {e.start}: {e.reason})")
