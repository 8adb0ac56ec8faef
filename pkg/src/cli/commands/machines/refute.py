"""
refute CLI Command - Bounded Universality Refutation

Purpose:
    Searches for the shortlex-least word of length <= --maxlen that a GJFA rejects.
    Universality itself is undecidable; a miss only says nothing was found up to
    the bound.

Command Usage:
    python cli.py refute workspace/machines/m1.gjfa --maxlen 3
    python cli.py refute workspace/out/g_ab.gjfa --maxlen 2

Output:
    The rejected word (ε for the empty word), or NONE-UP-TO <n>.

Return Codes:
    0 - A rejected word was found
    1 - NONE-UP-TO n
    2 - Usage error (not a GJFA, negative bound, ...)
"""

from ....core.errors import InvalidParametersError, UnsupportedMachineError
from ....core.formats import load_machine
from ....core.gjfa import Gjfa, refute_universality


def execute(args):
    """Execute refute command"""
    if args.maxlen < 0:
        raise InvalidParametersError(f"--maxlen must be non-negative, got {args.maxlen}")

    machine = load_machine(args.machine)
    if not isinstance(machine, Gjfa):
        raise UnsupportedMachineError("refute works on GJFA machines only")

    found = refute_universality(machine, args.maxlen)
    if found is None:
        print(f"NONE-UP-TO {args.maxlen}")
        return 1
    print(found)
    return 0


def setup_parser(subparsers):
    """Setup argument parser for refute command"""
    parser = subparsers.add_parser(
        'refute',
        help='Find the shortlex-least word a GJFA rejects'
    )
    parser.add_argument(
        'machine',
        help='GJFA file'
    )
    parser.add_argument(
        '--maxlen',
        type=int,
        required=True,
        help='Largest word length to search'
    )
    parser.set_defaults(func=execute)
    return parser
