"""
Pre-configured Logging Infrastructure for the Discontinuous Input Toolkit

Purpose:
    Provides one logger for the whole toolkit so that engines, suites and CLI
    commands report progress the same way.

Why This Module Exists:
    The engines run exhaustive searches that can take seconds. Search statistics
    (configurations visited, closure sizes) are useful when something looks slow,
    but they must never mix with the result lines that scripts parse from stdout.
    Centralising the configuration here gives us:
    - Consistent timestamp and message formatting
    - A single place to raise or lower verbosity (--verbose, DISCO_LOG_LEVEL)
    - Output on stderr, leaving stdout to ACCEPT/REJECT, PASS/FAIL and word lists

Usage in Toolkit Code:
    from src.core.logger import log

    log.info("Running suite lemma4")
    log.debug("accepts: 118 configurations visited")

Output Format:
    14:35:22 | [00:00] | INFO | Running suite lemma4
    14:35:31 | [00:09] | INFO | Suite lemma4 finished: PASS

Configuration:
    - Level: WARNING by default, overridden by DISCO_LOG_LEVEL or set_level()
    - Format: HH:MM:SS | [MM:SS] | LEVEL | message
    - Stream: stderr
    - Logger name: 'disco-toolkit'
"""

import logging
import sys
import time


class ElapsedTimeFormatter(logging.Formatter):
    """
    Custom formatter that includes elapsed time since logger initialization.

    Format: HH:MM:SS | [MM:SS] | LEVEL | message

    Example:
        08:03:00 | [00:00] | INFO | Running suite cor8...
        08:03:06 | [00:06] | INFO | generate: 4213 words up to length 18
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.start_time = time.time()

    def format(self, record):
        elapsed_seconds = int(time.time() - self.start_time)
        minutes = elapsed_seconds // 60
        seconds = elapsed_seconds % 60

        record.elapsed = f"[{minutes:02d}:{seconds:02d}]"

        return super().format(record)


formatter = ElapsedTimeFormatter(
    fmt='%(asctime)s | %(elapsed)s | %(levelname)s | %(message)s',
    datefmt='%H:%M:%S'
)

# stderr: stdout carries the scriptable results
handler = logging.StreamHandler(sys.stderr)
handler.setFormatter(formatter)

log = logging.getLogger('disco-toolkit')
log.setLevel(logging.WARNING)
log.addHandler(handler)

log.propagate = False


def set_level(level):
    """
    Change the toolkit log level.

    Args:
        level: A level name ('DEBUG', 'info', ...) or a logging level number.
               Unknown names fall back to WARNING.
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    log.setLevel(level)
