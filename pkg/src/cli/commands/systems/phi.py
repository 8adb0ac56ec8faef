"""
phi CLI Command - φ, Membership in K and the Potential Φ

Purpose:
    For a binary word prints φ(w), whether w is in K, and Φ(φ(w)). For a word over
    {u, V} prints its potential Φ.

Command Usage:
    python cli.py phi 0100
    python cli.py phi 100110 --json
    python cli.py phi uuVu

Return Codes:
    0 - Values printed
    2 - The word is neither binary nor over {u, V}
"""

from ...utils.formatting import print_box, print_info
from ...utils.output import print_json
from ....core.errors import AlphabetMismatchError
from ....core.systems import BINARY, UV, in_k, phi, potential
from ....core.words import word


def describe(w):
    """The values phi reports, as a JSON-ready dict."""
    if BINARY.covers(w):
        image = phi(w)
        return {
            'word': str(w),
            'phi': str(image),
            'in_k': in_k(w),
            'potential': potential(image),
        }
    if UV.covers(w):
        return {'word': str(w), 'potential': potential(w)}
    raise AlphabetMismatchError(f"{w} is neither a binary word nor a word over {{u, V}}")


def execute(args):
    """Execute phi command"""
    values = describe(word(args.word))

    if args.json:
        print_json(values)
        return 0

    print_box("φ, K and Φ")
    print_info("word", values['word'])
    if 'phi' in values:
        print_info("phi", values['phi'])
        print_info("in K", 'yes' if values['in_k'] else 'no')
    print_info("potential", values['potential'])
    print()
    return 0


def setup_parser(subparsers):
    """Setup argument parser for phi command"""
    parser = subparsers.add_parser(
        'phi',
        help='Print φ(w), membership in K and the potential Φ of a word'
    )
    parser.add_argument(
        'word',
        help='Binary word (e.g. 0100) or word over {u, V} (e.g. uuVu); _ for ε'
    )
    parser.add_argument(
        '--json',
        action='store_true',
        help='Output as JSON format instead of formatted text'
    )
    parser.set_defaults(func=execute)
    return parser
