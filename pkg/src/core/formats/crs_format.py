"""
Context Rewriting System / Clearing Restarting Automaton Text Format

    crs k=2
    sigma: 0 1
    gamma: 0 1
    instr 0a: ^ / 0 0 -> _ / $
    instr 1a: ^ / 1 0 -> _ / 0 0
    instr 2b: 0 0 / 1 1 -> _ / 0 1

Each instruction is `left / rule_from -> rule_to / right`. A leading `^` in the left
context and a trailing `$` in the right context are the word-boundary sentinels;
`_` is ε. When every instruction clears its factor and Γ = Σ the result is a
ClearingRA.
"""

import re

from ..errors import FormatError
from ..rewriting import ClearingRA, ContextRewritingSystem, Instruction
from ..words import EPSILON, LEFT_SENTINEL, RIGHT_SENTINEL, Alphabet
from .lines import Fields, at_line, key_value, split_header, symbols_from, word_from


HEADER_WIDTH = re.compile(r'^k=(\d+)$')


def _context(tokens, number, sentinel, leading):
    """Split off the sentinel (first token when leading, else last) and parse the rest."""
    anchored = False
    if tokens and (tokens[0] if leading else tokens[-1]) == sentinel:
        anchored = True
        tokens = tokens[1:] if leading else tokens[:-1]
    return word_from(tokens, number), anchored


def _instruction(ident, values, number) -> Instruction:
    parts = ' '.join(values).split('/')
    if len(parts) != 3:
        raise FormatError("an instruction reads 'left / v -> t / right'", number)
    left_tokens, rule_text, right_tokens = parts[0].split(), parts[1], parts[2].split()

    rule_from_text, arrow, rule_to_text = rule_text.partition('->')
    if not arrow:
        raise FormatError("the rule part of an instruction needs '->'", number)

    left, left_anchored = _context(left_tokens, number, LEFT_SENTINEL, leading=True)
    right, right_anchored = _context(right_tokens, number, RIGHT_SENTINEL, leading=False)
    return Instruction(
        id=ident,
        left=left,
        rule_from=word_from(rule_from_text.split(), number),
        rule_to=word_from(rule_to_text.split(), number),
        right=right,
        left_anchored=left_anchored,
        right_anchored=right_anchored,
    )


def parse_crs(text) -> ContextRewritingSystem:
    """
    Parse a rewriting system file.

    Raises:
        FormatError: with the line number of the first problem
    """
    header, tokens, lines = split_header(text, ('crs',))
    match = HEADER_WIDTH.match(tokens[1]) if len(tokens) == 2 else None
    if match is None:
        raise FormatError("the crs header reads 'crs k=N'", header[0])
    k = int(match.group(1))

    fields = Fields('crs')
    instructions = []
    for line in lines:
        number = line[0]
        key, values = key_value(line)
        words = key.split()
        if words and words[0] == 'instr':
            if len(words) != 2:
                raise FormatError("an instruction line starts with 'instr <id>:'", number)
            instructions.append((number, _instruction(words[1], values, number)))
        elif key in ('sigma', 'gamma'):
            fields.put(key, values, number)
        else:
            raise FormatError(f"unknown key {key!r}", number)

    number, values = fields.get('sigma')
    with at_line(number):
        sigma = Alphabet(symbols_from(values, number))
    number, values = fields.get('gamma')
    with at_line(number):
        gamma = Alphabet(symbols_from(values, number))

    seen = set()
    for number, instr in instructions:
        if instr.id in seen:
            raise FormatError(f"duplicate instruction id {instr.id!r}", number)
        seen.add(instr.id)
        for part in (instr.left, instr.rule_from, instr.rule_to, instr.right):
            with at_line(number):
                gamma.require(part)
        if instr.left_width > k or instr.right_width > k:
            raise FormatError(f"instruction {instr.id} has a context longer than k = {k}", number)

    built = tuple(instr for _, instr in instructions)
    with at_line(header[0]):
        if set(sigma) == set(gamma) and built and all(i.is_clearing for i in built):
            return ClearingRA(sigma, gamma, k, built)
        return ContextRewritingSystem(sigma, gamma, k, built)


def _context_text(context, anchored, sentinel, leading):
    tokens = list(context.symbols)
    if anchored:
        tokens = [sentinel] + tokens if leading else tokens + [sentinel]
    return ' '.join(tokens) if tokens else EPSILON.text()


def dump_crs(system) -> str:
    lines = [
        f"crs k={system.k}",
        f"sigma: {' '.join(system.sigma)}",
        f"gamma: {' '.join(system.gamma)}",
    ]
    for instr in system.instructions:
        left = _context_text(instr.left, instr.left_anchored, LEFT_SENTINEL, leading=True)
        right = _context_text(instr.right, instr.right_anchored, RIGHT_SENTINEL, leading=False)
        lines.append(f"instr {instr.id}: {left} / {instr.rule_from.text()} -> {instr.rule_to.text()} / {right}")
    return '\n'.join(lines) + '\n'
