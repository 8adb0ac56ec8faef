"""
generate CLI Command - Bounded Language Listing

Purpose:
    Prints every word of length <= --maxlen that the machine accepts, one per line
    in shortlex order (ε first). With --filter K only binary words without the
    factors 000, 010, 101, 111 are kept.

Command Usage:
    python cli.py generate builtin:R01 --maxlen 6
    python cli.py generate builtin:R01 --maxlen 18 --filter K
    python cli.py generate workspace/machines/m1.gjfa --maxlen 2

Return Codes:
    0 - Listing printed (possibly empty)
    2 - Usage error (negative bound, --filter K on a non-binary machine, ...)
"""

from ...utils.machines import input_alphabet, language_up_to
from ....core.errors import InvalidParametersError, UnsupportedMachineError
from ....core.formats import load_machine
from ....core.logger import log
from ....core.systems import BINARY, in_k


def execute(args):
    """Execute generate command"""
    if args.maxlen < 0:
        raise InvalidParametersError(f"--maxlen must be non-negative, got {args.maxlen}")

    machine = load_machine(args.machine)
    if args.filter == 'K' and not input_alphabet(machine).issubset(BINARY):
        raise UnsupportedMachineError("--filter K needs a machine over the binary alphabet {0, 1}")

    words = language_up_to(machine, args.maxlen)
    if args.filter == 'K':
        words = [w for w in words if in_k(w)]
    log.debug(f"generate: {len(words)} words")

    for w in words:
        print(w)
    return 0


def setup_parser(subparsers):
    """Setup argument parser for generate command"""
    parser = subparsers.add_parser(
        'generate',
        help='List the accepted words up to a length bound'
    )
    parser.add_argument(
        'machine',
        help='Machine file (gjfa, gnf, crs) or builtin:R01 / builtin:RuV'
    )
    parser.add_argument(
        '--maxlen',
        type=int,
        required=True,
        help='Largest word length to list'
    )
    parser.add_argument(
        '--filter',
        choices=['K'],
        help='Keep only words in the regular filter K'
    )
    parser.set_defaults(func=execute)
    return parser
