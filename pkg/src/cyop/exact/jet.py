"""Truncated polynomials in a nilpotent parameter eps (eps**4 = 0).

The Frobenius construction deforms the exponent at a MUM point by eps and
reads the log-graded solutions off the eps-coefficients; four slots cover
operators up to order four.
"""

from fractions import Fraction

from .poly import Poly
from .rational import as_fraction

JET_DEPTH = 4


class Jet:
    __slots__ = ("c",)

    def __init__(self, coeffs=(0,)):
        cs = [as_fraction(v) for v in coeffs][:JET_DEPTH]
        cs += [Fraction(0)] * (JET_DEPTH - len(cs))
        object.__setattr__(self, "c", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    def __reduce__(self):
        return (Jet, (self.c,))

    @classmethod
    def eps(cls):
        return cls([0, 1])

    @classmethod
    def poly_at(cls, poly, point):
        """Taylor jet of ``poly(point + eps)``."""
        shifted = poly.taylor_shift(point)
        return cls(shifted.coeffs[:JET_DEPTH])

    def __getitem__(self, k):
        return self.c[k]

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == Jet([other]).c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def _lift(self, other):
        return other if isinstance(other, Jet) else Jet([other])

    def __add__(self, other):
        other = self._lift(other)
        return Jet([a + b for a, b in zip(self.c, other.c)])

    __radd__ = __add__

    def __neg__(self):
        return Jet([-a for a in self.c])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Jet):
            k = as_fraction(other)
            return Jet([k * a for a in self.c])
        a, b = self.c, other.c
        out = [Fraction(0)] * JET_DEPTH
        for i in range(JET_DEPTH):
            if a[i]:
                for j in range(JET_DEPTH - i):
                    out[i + j] += a[i] * b[j]
        return Jet(out)

    __rmul__ = __mul__

    def inverse(self):
        a = self.c
        if a[0] == 0:
            raise ZeroDivisionError("jet with zero constant part is not invertible")
        inv = [1 / a[0]]
        for k in range(1, JET_DEPTH):
            s = sum((a[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0))
            inv.append(-s / a[0])
        return Jet(inv)

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return self * (1 / as_fraction(other))
        return self * other.inverse()

    def __repr__(self):
        return f"Jet{tuple(str(v) for v in self.c)}"


class JetSeries:
    """Power series in x whose coefficients are eps-jets."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        cs = [c if isinstance(c, Jet) else Jet([c]) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        cs = cs[: order + 1] + [Jet()] * max(0, order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("JetSeries is immutable")

    def __reduce__(self):
        return (JetSeries, (self.coeffs, self.order))

    def component(self, j):
        """The series of eps**j coefficients."""
        from .series import PowerSeries

        return PowerSeries([c[j] for c in self.coeffs], self.order)


def poly_jet(poly: Poly, point) -> Jet:
    return Jet.poly_at(poly, point)
