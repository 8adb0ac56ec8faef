"""Verification CLI Commands"""

from .verify import setup_parser

__all__ = ['setup_parser']
