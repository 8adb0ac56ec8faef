"""
Output Format Utilities for CLI Commands

Purpose:
    JSON output for the commands that offer --json (phi, verify), so their
    results can be consumed by scripts without parsing the human layout.

Design Pattern:
    def execute(args):
        # ... compute ...

        if args.json:
            print_json(data)
            return 0

        # ... pretty format for humans ...
"""

import json


def format_as_json(data, indent=2):
    """
    Format Python data structures as a JSON string.

    Non-ASCII symbols (ε, β, φ) are kept as they are rather than escaped.

    Raises:
        TypeError: If data contains non-JSON-serializable objects
    """
    return json.dumps(data, indent=indent, ensure_ascii=False)


def print_json(data, indent=2):
    """Print data as formatted JSON to stdout."""
    print(format_as_json(data, indent=indent))
