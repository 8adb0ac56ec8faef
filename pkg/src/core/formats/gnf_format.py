"""
Grammar Text Format

    gnf
    terminals: a b
    nonterminals: S B
    start: S
    rule: S -> a B
    rule: B -> b

The parsed grammar is validated; a rule that is not in Greibach normal form is
reported at its own line.
"""

from ..errors import FormatError, GrammarError
from ..grammar import GnfGrammar, Production, validate
from ..words import Alphabet
from .lines import Fields, at_line, key_value, single, split_header, symbols_from, word_from


def parse_gnf(text) -> GnfGrammar:
    """
    Parse and validate a grammar file.

    Raises:
        FormatError: syntax problems and validation failures, with line numbers
    """
    header, tokens, lines = split_header(text, ('gnf',))
    if len(tokens) != 1:
        raise FormatError("the gnf header takes no arguments", header[0])

    fields = Fields('gnf')
    rules = []
    rule_lines = []
    for line in lines:
        number = line[0]
        key, values = key_value(line)
        if key == 'rule':
            if len(values) < 2 or values[1] != '->':
                raise FormatError("a rule reads 'rule: A -> x B C ...'", number)
            lhs = single(values[:1], number, 'rule')
            rules.append(Production(lhs, word_from(values[2:], number)))
            rule_lines.append(number)
        elif key in ('terminals', 'nonterminals', 'start'):
            fields.put(key, values, number)
        else:
            raise FormatError(f"unknown key {key!r}", number)

    number, values = fields.get('terminals')
    with at_line(number):
        terminals = Alphabet(symbols_from(values, number))
    number, values = fields.get('nonterminals')
    nonterminals = symbols_from(values, number)
    number, values = fields.get('start')
    start = single(values, number, 'start')

    grammar = GnfGrammar(terminals, nonterminals, start, tuple(rules))
    try:
        return validate(grammar)
    except GrammarError as e:
        line = rule_lines[e.rule_index] if e.rule_index is not None else None
        raise FormatError(str(e), line) from e


def dump_gnf(grammar) -> str:
    lines = [
        'gnf',
        f"terminals: {' '.join(grammar.terminals)}",
        f"nonterminals: {' '.join(grammar.nonterminals)}",
        f"start: {grammar.start}",
    ]
    lines += [f"rule: {p.lhs} -> {p.rhs.text()}" for p in grammar.rules]
    return '\n'.join(lines) + '\n'
