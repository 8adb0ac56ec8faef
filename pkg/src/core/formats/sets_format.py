"""Sidecar listing of the reduction's word sets: one labelled word per line."""

from typing import Dict, List

from ..errors import FormatError
from ..words import Word
from .lines import key_value, significant_lines, word_from


LABELS = ('P_BU', 'P_NB', 'P_C', 't')


def dump_sets(artifacts) -> str:
    lines = ['# word sets of the grammar-to-GJFA reduction']
    for label, words in (('P_BU', artifacts.p_bu), ('P_NB', artifacts.p_nb), ('P_C', artifacts.p_c)):
        lines += [f"{label}: {w.text()}" for w in words]
    lines.append(f"t: {artifacts.t.text()}")
    return '\n'.join(lines) + '\n'


def parse_sets(text) -> Dict[str, List[Word]]:
    """Read a sets file back into {label: [words in file order]}."""
    sets: Dict[str, List[Word]] = {label: [] for label in LABELS}
    for line in significant_lines(text):
        label, tokens = key_value(line)
        if label not in sets:
            raise FormatError(f"unknown set label {label!r}", line[0])
        sets[label].append(word_from(tokens, line[0]))
    return sets
