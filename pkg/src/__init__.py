"""Discontinuous Input Toolkit"""
