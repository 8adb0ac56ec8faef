"""
GJFA Text Format

    gjfa
    alphabet: a b
    states: q0 q1
    start: q0
    final: q1
    rule: q0 q1 a b        # label = word "ab"; a bare `_` means ε

`final:` may be repeated or left empty. Rules keep their file order, which is the
order the membership search tries them in.
"""

from ..errors import FormatError
from ..gjfa import Gjfa, Rule
from ..words import Alphabet
from .lines import Fields, at_line, key_value, single, split_header, symbols_from, word_from


def parse_gjfa(text) -> Gjfa:
    """
    Parse a GJFA file.

    Raises:
        FormatError: with the line number of the first problem
    """
    header, tokens, lines = split_header(text, ('gjfa',))
    if len(tokens) != 1:
        raise FormatError("the gjfa header takes no arguments", header[0])

    fields = Fields('gjfa')
    finals = []
    rules = []
    for line in lines:
        number = line[0]
        key, values = key_value(line)
        if key == 'rule':
            if len(values) < 2:
                raise FormatError("a rule needs a source and a target state", number)
            rules.append((number, values[0], values[1], word_from(values[2:], number)))
        elif key == 'final':
            finals.extend((number, name) for name in values)
        elif key in ('alphabet', 'states', 'start'):
            fields.put(key, values, number)
        else:
            raise FormatError(f"unknown key {key!r}", number)

    number, values = fields.get('alphabet')
    with at_line(number):
        alphabet = Alphabet(symbols_from(values, number))
    number, values = fields.get('states')
    states = symbols_from(values, number)
    if not states:
        raise FormatError("at least one state is required", number)
    number, values = fields.get('start')
    start = single(values, number, 'start')
    if start not in states:
        raise FormatError(f"start state {start!r} is not declared", number)

    known = set(states)
    for number, name in finals:
        if name not in known:
            raise FormatError(f"final state {name!r} is not declared", number)

    built = []
    for number, source, target, label in rules:
        for state in (source, target):
            if state not in known:
                raise FormatError(f"rule uses the undeclared state {state!r}", number)
        with at_line(number):
            alphabet.require(label)
        built.append(Rule(source, label, target))

    return Gjfa(states, alphabet, tuple(built), start, frozenset(name for _, name in finals))


def dump_gjfa(machine) -> str:
    """Text form of `machine`; parse_gjfa(dump_gjfa(m)) == m."""
    finals = ' '.join(s for s in machine.states if s in machine.finals)
    lines = [
        'gjfa',
        f"alphabet: {' '.join(machine.alphabet)}",
        f"states: {' '.join(machine.states)}",
        f"start: {machine.start}",
        f"final: {finals}".rstrip(),
    ]
    lines += [f"rule: {r.source} {r.target} {r.label.text()}" for r in machine.rules]
    return '\n'.join(lines) + '\n'
