"""Machine CLI Commands: member, generate, refute"""

from .member import setup_parser as setup_member_parser
from .generate import setup_parser as setup_generate_parser
from .refute import setup_parser as setup_refute_parser


def setup_parser(subparsers):
    """Setup all machine command parsers"""
    setup_member_parser(subparsers)
    setup_generate_parser(subparsers)
    setup_refute_parser(subparsers)


__all__ = ['setup_parser']
