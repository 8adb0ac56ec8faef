"""
verify CLI Command - Run Verification Suites

Purpose:
    Runs one suite or all of them and prints the report, one check per line:

        PASS lemma6.chain-1-1
        FAIL cor8.k-length-set lengths=[2, 6]

Command Usage:
    python cli.py verify --suite lemma6
    python cli.py verify --all
    python cli.py verify --all --seed 7 --json

Suites:
    lemma2 lemma3 lemma4 lemma6 cor5 cor7 cor8 spectrum reduction gjfa-cross

Return Codes:
    0 - Every check passed
    1 - At least one check failed
    2 - Unknown suite
"""

from ...utils.formatting import Colors, print_box, print_verdict
from ...utils.output import print_json
from ....core.verification import SUITES, run_all, run_suite


def execute(args):
    """Execute verify command"""
    if args.all:
        reports = run_all(seed=args.seed)
    else:
        reports = [run_suite(args.suite, seed=args.seed)]
    passed = all(report.passed for report in reports)

    if args.json:
        print_json({
            'passed': passed,
            'suites': [report.to_dict() for report in reports],
        })
        return 0 if passed else 1

    print_box("Verification Report")
    for report in reports:
        for check, line in zip(report.checks, report.lines()):
            print_verdict(check.passed, line)

    checks = [check for report in reports for check in report.checks]
    failed = sum(1 for check in checks if not check.passed)
    elapsed = sum(report.wall_time for report in reports)
    print(f"\n{Colors.DIM}{len(checks) - failed}/{len(checks)} checks passed "
          f"in {len(reports)} suite(s), {elapsed:.1f}s{Colors.RESET}")
    return 0 if passed else 1


def setup_parser(subparsers):
    """Setup argument parser for verify command"""
    parser = subparsers.add_parser(
        'verify',
        help='Run verification suites and print a PASS/FAIL report'
    )
    which = parser.add_mutually_exclusive_group(required=True)
    which.add_argument(
        '--suite',
        metavar='NAME',
        help=f"Suite to run ({', '.join(SUITES)})"
    )
    which.add_argument(
        '--all',
        action='store_true',
        help='Run every suite in order'
    )
    parser.add_argument(
        '--seed',
        type=int,
        help='Seed for sampled machine pools (default: DISCO_SEED or 2015)'
    )
    parser.add_argument(
        '--json',
        action='store_true',
        help='Output the report as JSON'
    )
    parser.set_defaults(func=execute)
    return parser
