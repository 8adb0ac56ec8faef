"""
reduce CLI Command - Grammar to GJFA Universality Reduction

Purpose:
    Reads a Greibach normal form grammar and writes the GJFA M_G of the
    universality reduction together with its word sets.

Command Usage:
    python cli.py reduce workspace/grammars/g_ab.gnf --out workspace/out/g_ab

Files Written:
    <prefix>.gjfa   the machine, in the GJFA text format (re-parses to an equal machine)
    <prefix>.sets   P_BU, P_NB, P_C and t, one labelled word per line

Return Codes:
    0 - Files written
    2 - The grammar file is missing or does not validate (the first bad rule is named)
"""

from pathlib import Path

from ...utils.formatting import print_box, print_info, print_success
from ....core.errors import InvalidParametersError
from ....core.formats import dump_gjfa, dump_sets, parse_gnf, read_source
from ....core.reduction import build_artifacts


def execute(args):
    """Execute reduce command"""
    source = Path(args.grammar)
    if not source.is_file():
        raise InvalidParametersError(f"no such grammar file: {args.grammar}")

    grammar = parse_gnf(read_source(source))
    artifacts = build_artifacts(grammar)

    prefix = Path(args.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    machine_path = prefix.with_name(prefix.name + '.gjfa')
    sets_path = prefix.with_name(prefix.name + '.sets')
    machine_path.write_text(dump_gjfa(artifacts.machine), encoding='utf-8')
    sets_path.write_text(dump_sets(artifacts), encoding='utf-8')

    print_box("Universality Reduction")
    print_info("Γ", ' '.join(artifacts.gamma))
    print_info("t", artifacts.t.text())
    print_info("Rules", len(artifacts.machine.rules))
    print()
    print_success(f"Wrote {machine_path}")
    print_success(f"Wrote {sets_path}")
    return 0


def setup_parser(subparsers):
    """Setup argument parser for reduce command"""
    parser = subparsers.add_parser(
        'reduce',
        help='Build the GJFA of the universality reduction from a GNF grammar'
    )
    parser.add_argument(
        'grammar',
        help='Grammar file (gnf format)'
    )
    parser.add_argument(
        '--out',
        required=True,
        help='Output prefix; writes <prefix>.gjfa and <prefix>.sets'
    )
    parser.set_defaults(func=execute)
    return parser
