"""Discontinuous Input Toolkit CLI"""

from .main import main

__all__ = ['main']
