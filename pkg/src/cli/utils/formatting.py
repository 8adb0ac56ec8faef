"""
CLI Terminal Formatting Utilities

Purpose:
    Provides a consistent visual language for the CLI through ANSI color codes,
    box drawing, and formatted output helpers.

Why This Module Exists:
    Most commands print lines that scripts parse (ACCEPT / REJECT, PASS / FAIL,
    word lists). The human-facing parts around them (section headers, the error
    marker, key-value summaries) should look the same everywhere, and they must
    never leak escape codes into a pipe.

Color Handling:
    Colors are switched off when stdout is not a terminal or when the NO_COLOR
    environment variable is set. Every attribute of Colors is then the empty
    string, so f"{Colors.GREEN}...{Colors.RESET}" degrades to plain text.

Streams:
    print_error() and print_warning() write to stderr; everything else to stdout.
"""

import os
import sys


def _color_enabled():
    if os.getenv('NO_COLOR'):
        return False
    return hasattr(sys.stdout, 'isatty') and sys.stdout.isatty()


class Colors:
    """
    ANSI color codes for terminal output.

    Color Semantics:
        GREEN:  Success, ACCEPT, PASS
        RED:    Errors, REJECT, FAIL
        BLUE:   Informational, neutral data
        YELLOW: Warnings
        CYAN:   Commands, labels, box drawing
        BOLD:   Emphasis, section headers
        DIM:    Secondary information
        RESET:  Return to default terminal colors

    Usage:
        from src.cli.utils.formatting import Colors

        print(f"{Colors.GREEN}ACCEPT{Colors.RESET}")
    """
    GREEN = '\033[92m'
    RED = '\033[91m'
    BLUE = '\033[94m'
    YELLOW = '\033[93m'
    CYAN = '\033[96m'
    BOLD = '\033[1m'
    RESET = '\033[0m'
    DIM = '\033[2m'

    @classmethod
    def disable(cls):
        for name in ('GREEN', 'RED', 'BLUE', 'YELLOW', 'CYAN', 'BOLD', 'RESET', 'DIM'):
            setattr(cls, name, '')


if not _color_enabled():
    Colors.disable()


def print_box(title, width=65):
    """
    Print a decorative box header to visually separate sections.

    ╔═══════════════════════╗
    ║      Suite lemma6      ║
    ╚═══════════════════════╝
    """
    print(f"\n{Colors.CYAN}╔{'═' * (width - 2)}╗{Colors.RESET}")

    padding = (width - len(title) - 2) // 2
    print(f"{Colors.CYAN}║{' ' * padding}{Colors.BOLD}{title}{Colors.RESET}{Colors.CYAN}{' ' * (width - len(title) - padding - 2)}║{Colors.RESET}")

    print(f"{Colors.CYAN}╚{'═' * (width - 2)}╝{Colors.RESET}\n")


def print_success(message):
    print(f"{Colors.GREEN}✓{Colors.RESET} {message}")


def print_error(message):
    """Print an error message with a red ✗ to stderr."""
    print(f"{Colors.RED}✗{Colors.RESET} {message}", file=sys.stderr)


def print_warning(message):
    print(f"{Colors.YELLOW}⚠{Colors.RESET} {message}", file=sys.stderr)


def print_info(label, value, width=20):
    """
    Print a formatted key-value pair.

    Example:
        print_info("phi", "uVuu")

        phi                 : uVuu
    """
    print(f"{Colors.BOLD}{label:<{width}}{Colors.RESET}: {Colors.CYAN}{value}{Colors.RESET}")


def print_verdict(passed, text):
    """Print a result token (ACCEPT, PASS, ...) colored by outcome."""
    color = Colors.GREEN if passed else Colors.RED
    print(f"{color}{text}{Colors.RESET}")
