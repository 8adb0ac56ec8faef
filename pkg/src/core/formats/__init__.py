"""
Formats Module - plain-text machine, grammar and word-set files

Public API:
    parse_gjfa(), dump_gjfa()      GJFA files
    parse_gnf(), dump_gnf()        grammar files
    parse_crs(), dump_crs()        rewriting system files
    dump_sets(), parse_sets()      reduction sidecar files
    parse_machine(), load_machine()  header dispatch and builtin:<name> references
    read_source()                  UTF-8 file reading with parse errors on bad bytes
"""

from .gjfa_format import dump_gjfa, parse_gjfa
from .gnf_format import dump_gnf, parse_gnf
from .crs_format import dump_crs, parse_crs
from .sets_format import dump_sets, parse_sets
from .loader import BUILTIN_PREFIX, load_machine, parse_machine, read_source

__all__ = [
    'dump_gjfa', 'parse_gjfa', 'dump_gnf', 'parse_gnf', 'dump_crs', 'parse_crs',
    'dump_sets', 'parse_sets', 'BUILTIN_PREFIX', 'load_machine', 'parse_machine', 'read_source',
]
