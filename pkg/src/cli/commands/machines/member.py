"""
member CLI Command - Membership with an Optional Certificate

Purpose:
    Decides whether a machine accepts a word and, with --trace, prints the
    computation that proves it: one step per line as `<word>  [<rule-id> @ <pos>]`.

Command Usage:
    python cli.py member builtin:R01 100110 --trace
    python cli.py member workspace/machines/m1.gjfa "a b"
    python cli.py member workspace/grammars/g_ab.gnf ab --trace

Machines:
    gjfa files     rules are named r1, r2, ... in file order; the word shown is the
                   one left after deleting the rule's label at the position
    gnf files      derivation of the word; each line is the next sentential form
    crs files      w ⊢* ε for clearing systems; for other systems a forward
                   search from ε within words no longer than the input

Return Codes:
    0 - ACCEPT
    1 - REJECT
    2 - Usage error (unknown symbol, unreadable machine file, ...)
"""

from ...utils.formatting import print_verdict, print_warning
from ...utils.machines import decide, input_alphabet, kind_of, shrinks
from ....core.formats import load_machine
from ....core.logger import log
from ....core.words import Word


def execute(args):
    """Execute member command"""
    machine = load_machine(args.machine)
    w = Word.parse(args.word, input_alphabet(machine))
    log.debug(f"member: {kind_of(machine)} machine, |w| = {len(w)}")

    if kind_of(machine) == 'crs' and shrinks(machine):
        print_warning(f"bounded search: only words up to length {len(w)} were explored")

    accepted, lines = decide(machine, w)
    print_verdict(accepted, 'ACCEPT' if accepted else 'REJECT')
    if accepted and args.trace:
        for line in lines:
            print(line)
    return 0 if accepted else 1


def setup_parser(subparsers):
    """Setup argument parser for member command"""
    parser = subparsers.add_parser(
        'member',
        help='Decide whether a machine accepts a word'
    )
    parser.add_argument(
        'machine',
        help='Machine file (gjfa, gnf, crs) or builtin:R01 / builtin:RuV'
    )
    parser.add_argument(
        'word',
        help='Input word: whitespace-separated symbols, compact for one-letter alphabets, _ for ε'
    )
    parser.add_argument(
        '--trace',
        action='store_true',
        help='Print the accepting computation, one step per line'
    )
    parser.set_defaults(func=execute)
    return parser
