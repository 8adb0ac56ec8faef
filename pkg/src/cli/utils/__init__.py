"""CLI Utilities"""
