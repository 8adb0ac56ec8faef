"""
Discontinuous Input Toolkit - Main CLI Logic

Handles argument parsing, command routing, global flags and the exit-code
contract: 0 accept/pass, 1 reject/fail, 2 usage error, 130 interrupted.
"""

import sys
import argparse

from .utils.formatting import Colors, print_error
from .commands.machines import setup_parser as machines_setup_parser
from .commands.reduction import setup_parser as reduction_setup_parser
from .commands.verification import setup_parser as verification_setup_parser
from .commands.systems import setup_parser as systems_setup_parser
from ..core.config import load_settings
from ..core.errors import ToolkitError
from ..core.logger import set_level


# Toolkit version
VERSION = "0.1.0"


def build_parser():
    parser = argparse.ArgumentParser(
        prog='cli.py',
        description='Discontinuous Input Toolkit - jumping automata, clearing restarting automata and their certificates',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
{Colors.BOLD}Commands:{Colors.RESET}
  {Colors.CYAN}member{Colors.RESET} <machine> <word> [--trace]
      Decide membership; --trace prints one step per line
  {Colors.CYAN}generate{Colors.RESET} <machine> --maxlen N [--filter K]
      List accepted words up to length N in shortlex order
  {Colors.CYAN}refute{Colors.RESET} <gjfa> --maxlen N
      Shortlex-least rejected word up to length N, or NONE-UP-TO N
  {Colors.CYAN}reduce{Colors.RESET} <grammar.gnf> --out PREFIX
      Write PREFIX.gjfa and PREFIX.sets for the universality reduction
  {Colors.CYAN}verify{Colors.RESET} (--suite NAME | --all) [--seed S] [--json]
      Run verification suites; one PASS/FAIL line per check
  {Colors.CYAN}phi{Colors.RESET} <word> [--json]
      φ(w), membership in K and the potential Φ

{Colors.BOLD}Machines:{Colors.RESET}
  A file whose first line is gjfa, gnf or crs k=N, or builtin:R01 / builtin:RuV

{Colors.BOLD}Examples:{Colors.RESET}
  python cli.py member builtin:R01 100110 --trace
  python cli.py generate builtin:R01 --maxlen 18 --filter K
  python cli.py reduce workspace/grammars/g_ab.gnf --out workspace/out/g_ab
  python cli.py refute workspace/out/g_ab.gjfa --maxlen 2
  python cli.py verify --all
        """
    )

    parser.add_argument(
        '--version',
        action='store_true',
        help='Show toolkit version'
    )
    parser.add_argument(
        '--verbose', '-v',
        action='store_true',
        help='Log search statistics to stderr'
    )

    subparsers = parser.add_subparsers(
        dest='command',
        help='Available commands'
    )

    machines_setup_parser(subparsers)
    reduction_setup_parser(subparsers)
    verification_setup_parser(subparsers)
    systems_setup_parser(subparsers)
    return parser


def main(argv=None):
    """Main CLI entry point"""
    argv = sys.argv[1:] if argv is None else list(argv)

    # Handle global --version flag before argument parsing
    if '--version' in argv:
        print(f"Discontinuous Input Toolkit v{VERSION}")
        return 0

    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 0

    try:
        set_level(load_settings().log_level)
        if args.verbose:
            set_level('DEBUG')
        return args.func(args)
    except ToolkitError as e:
        print_error(f"{e.kind}: {e}")
        return 2
    except KeyboardInterrupt:
        print(f"\n\n{Colors.YELLOW}Interrupted by user{Colors.RESET}\n")
        return 130
    except Exception as e:
        print_error(f"Unexpected error: {e}")
        if args.verbose:
            import traceback
            traceback.print_exc()
        return 1


if __name__ == '__main__':
    sys.exit(main())
