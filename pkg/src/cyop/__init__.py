"""Exact toolkit for Calabi-Yau differential operators of low degree."""

__version__ = "0.1.0"
