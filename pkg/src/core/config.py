"""
Toolkit Settings Loaded from the Environment

Purpose:
    Reads the few knobs the toolkit has from environment variables, optionally
    provided through a .env file in the project root.

Environment Variables (all optional):
    DISCO_SEED       Seed for sampled pools (random GJFA cross-check). Default 2015.
    DISCO_POOL_SIZE  Number of random machines in the gjfa-cross suite. Default 200.
    DISCO_LOG_LEVEL  Log level name for the toolkit logger. Default WARNING.

Command-line flags (--seed, --verbose) take precedence over these values.
"""

import os
from dataclasses import dataclass

from dotenv import load_dotenv

from .errors import ToolkitError


DEFAULT_SEED = 2015
DEFAULT_POOL_SIZE = 200
DEFAULT_LOG_LEVEL = 'WARNING'


@dataclass(frozen=True)
class Settings:
    seed: int = DEFAULT_SEED
    pool_size: int = DEFAULT_POOL_SIZE
    log_level: str = DEFAULT_LOG_LEVEL


def _int_from_env(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ToolkitError(f"{name} must be an integer, got {raw!r}")


def load_settings():
    """
    Load settings from the environment (and .env if present).

    Returns:
        Settings: resolved configuration

    Raises:
        ToolkitError: if a numeric variable is not an integer
    """
    load_dotenv()

    return Settings(
        seed=_int_from_env('DISCO_SEED', DEFAULT_SEED),
        pool_size=_int_from_env('DISCO_POOL_SIZE', DEFAULT_POOL_SIZE),
        log_level=os.getenv('DISCO_LOG_LEVEL', DEFAULT_LOG_LEVEL),
    )
