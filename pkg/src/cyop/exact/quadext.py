"""Exact arithmetic in quadratic fields Q(sqrt(D))."""

import cmath
import math
from fractions import Fraction

from .poly import Poly, rational_sqrt
from .rational import as_fraction, format_rational


def squarefree_decomposition(n):
    """Write a nonzero integer n as k**2 * s with s squarefree; return (k, s)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    k, s = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            s *= p
        p += 1 if p == 2 else 2
    s *= n
    return k, sign * s


class QuadExt:
    """The number ``a + b*sqrt(D)`` with rational a, b and squarefree integer D.

    ``D`` is normalised to a squarefree integer different from 1 so that equal
    numbers have equal representations.  The defining modulus is ``t**2 - D``.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b, D):
        a, b, D = as_fraction(a), as_fraction(b), as_fraction(D)
        if D == 0:
            raise ValueError("D must be nonzero")
        # sqrt(p/q) = sqrt(p*q)/q
        num = D.numerator * D.denominator
        k, s = squarefree_decomposition(num)
        b = b * Fraction(k, D.denominator)
        if s == 1:
            a, b, s = a + b, Fraction(0), 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", s)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @property
    def modulus(self):
        return Poly([-self.D, 0, 1])

    def is_rational(self):
        return self.b == 0

    def rational_value(self):
        if self.b != 0:
            raise ValueError("irrational value")
        return self.a

    def _lift(self, other):
        if isinstance(other, QuadExt):
            if other.D != self.D and other.b != 0 and self.b != 0:
                raise ValueError("mixing different quadratic fields")
            return other
        return QuadExt(as_fraction(other), 0, self.D)

    def _field(self, other):
        return self.D if self.b != 0 or other.b == 0 else other.D

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return (self.a, self.b, self.D) == (other.a, other.b, other.D)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.D)

    def __add__(self, other):
        other = self._lift(other)
        return QuadExt(self.a + other.a, self.b + other.b, self._field(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        D = self._field(other)
        return QuadExt(self.a * other.a + D * self.b * other.b, self.a * other.b + self.b * other.a, D)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.D)

    def norm(self):
        return self.a * self.a - self.D * self.b * self.b

    def __truediv__(self, other):
        other = self._lift(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return self * other.conjugate() * QuadExt(1 / n, 0, other.D)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k):
        if k < 0:
            return QuadExt(1, 0, self.D) / self ** (-k)
        result = QuadExt(1, 0, self.D)
        for _ in range(k):
            result = result * self
        return result

    def __complex__(self):
        root = cmath.sqrt(self.D)
        return complex(float(self.a) + float(self.b) * root)

    def numeric(self, digits=6):
        """Decimal display with the given number of significant digits."""
        z = complex(self)
        if self.D > 0 or self.b == 0:
            return _sig(z.real, digits)
        return f"{_sig(z.real, digits)}{'+' if z.imag >= 0 else '-'}{_sig(abs(z.imag), digits)}i"

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        root = f"sqrt({self.D})"
        b = "" if abs(self.b) == 1 else format_rational(abs(self.b)) + "*"
        if self.a == 0:
            return f"{'-' if self.b < 0 else ''}{b}{root}"
        return f"{format_rational(self.a)} {'-' if self.b < 0 else '+'} {b}{root}"

    def __repr__(self):
        return f"QuadExt({self})"


def _sig(v, digits):
    if v == 0:
        return "0"
    exp = math.floor(math.log10(abs(v)))
    decimals = max(digits - 1 - exp, 0)
    return f"{v:.{decimals}f}"


def quadratic_roots(p):
    """Both roots of a degree-2 rational polynomial as QuadExt (or Fractions)."""
    if p.degree != 2:
        raise ValueError("need a quadratic")
    c, b, a = p[0], p[1], p[2]
    disc = b * b - 4 * a * c
    s = rational_sqrt(disc)
    if s is not None:
        return sorted({(-b - s) / (2 * a), (-b + s) / (2 * a)}) if s else [-b / (2 * a)] * 2
    half = -b / (2 * a)
    scale = 1 / (2 * a)
    return [QuadExt(half, -scale, disc), QuadExt(half, scale, disc)]
