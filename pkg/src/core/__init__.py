"""Core engines of the Discontinuous Input Toolkit"""
