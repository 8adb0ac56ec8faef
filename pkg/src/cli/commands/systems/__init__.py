"""Rewriting System CLI Commands"""

from .phi import setup_parser

__all__ = ['setup_parser']
