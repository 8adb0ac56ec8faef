"""Reduction CLI Commands"""

from .reduce import setup_parser

__all__ = ['setup_parser']
