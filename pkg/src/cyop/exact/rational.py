"""Rational numbers are plain :class:`fractions.Fraction` values.

This module only adds the text syntax used throughout the package:
an optional sign, an integer, and an optional ``/`` with a positive
denominator, e.g. ``-1880/9``.
"""

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text):
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    value = Fraction(int(num), int(den) if den else 1)
    return -value if sign == "-" else value


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_fraction(value):
    """Coerce ints, Fractions and rational strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")
