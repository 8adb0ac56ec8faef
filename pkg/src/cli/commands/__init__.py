"""CLI Commands"""
