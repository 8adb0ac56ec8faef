#!/usr/bin/env python3
"""
Discontinuous Input Toolkit - CLI Entry Point

Jumping finite automata, clearing restarting automata, and executable checks of
their constructions.

Usage:
    python cli.py member builtin:R01 100110 --trace
    python cli.py verify --all
    python cli.py --help                     Show help
    python cli.py --version                  Show toolkit version
"""

import sys
import os
from pathlib import Path


def ensure_python3():
    """
    Re-exec under python3 when started by a Python 2 interpreter.

    On many systems 'python' still points to python2; the toolkit needs 3.8+.
    """
    if sys.version_info[0] < 3:
        try:
            args = ['python3', __file__] + sys.argv[1:]
            os.execvp('python3', args)
        except Exception:
            print("Error: This toolkit requires Python 3.8+", file=sys.stderr)
            print("Please run with: python3 cli.py", file=sys.stderr)
            sys.exit(1)


def auto_detect_venv():
    """
    Make a project-local virtual environment (venv/, env/ or .venv/) importable
    when the CLI is started outside of it.

    How It Works:
        1. Returns at once if already inside a venv (sys.prefix != sys.base_prefix)
        2. Looks for a directory with a pyvenv.cfg next to this script
        3. Puts its site-packages first on sys.path
        4. Sets VIRTUAL_ENV and prepends the venv's bin directory to PATH

    Set DISCO_TOOLKIT_SILENT_VENV=1 to suppress the notice on stderr.
    """
    if sys.prefix != sys.base_prefix:
        return

    script_dir = Path(__file__).parent.resolve()

    venv_path = None
    for name in ('venv', 'env', '.venv'):
        candidate = script_dir / name
        if candidate.is_dir() and (candidate / 'pyvenv.cfg').exists():
            venv_path = candidate
            break

    if not venv_path:
        return

    if sys.platform == 'win32':
        site_packages = venv_path / 'Lib' / 'site-packages'
    else:
        python_version = f'python{sys.version_info.major}.{sys.version_info.minor}'
        site_packages = venv_path / 'lib' / python_version / 'site-packages'

    if not site_packages.exists():
        return

    site_packages_str = str(site_packages)
    if site_packages_str not in sys.path:
        sys.path.insert(0, site_packages_str)

    os.environ['VIRTUAL_ENV'] = str(venv_path)

    venv_bin = venv_path / ('Scripts' if sys.platform == 'win32' else 'bin')
    if venv_bin.exists():
        os.environ['PATH'] = f"{venv_bin}{os.pathsep}{os.environ.get('PATH', '')}"

    sys.prefix = str(venv_path)

    if os.environ.get('DISCO_TOOLKIT_SILENT_VENV') != '1':
        print(f"✓ Auto-detected virtual environment: {venv_path.name}", file=sys.stderr)


if __name__ == '__main__':
    ensure_python3()

    # before importing anything that needs third-party packages
    auto_detect_venv()

    from src.cli.main import main
    sys.exit(main())
