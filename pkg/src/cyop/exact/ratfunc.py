"""Reduced rational functions num/den over the rationals."""

from fractions import Fraction

from .poly import Poly


class RatFunc:
    """``num / den`` with ``den`` monic and ``gcd(num, den) == 1``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = num if isinstance(num, Poly) else Poly([num])
        den = Poly([1]) if den is None else (den if isinstance(den, Poly) else Poly([den]))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly([1])
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
                lc = den.lc
                num, den = num * (1 / lc), den * (1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _lift(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other, _reduced=True)
        return RatFunc(Poly([other]), _reduced=True)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (RatFunc, Poly, int, Fraction)):
            other = self._lift(other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        other = self._lift(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k):
        if k < 0:
            return RatFunc(self.den, self.num) ** (-k)
        return RatFunc(self.num**k, self.den**k, _reduced=True)

    def derivative(self):
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, value):
        return self.num(value) / self.den(value)

    def __repr__(self):
        if self.den == Poly([1]):
            return f"RatFunc({self.num.format()})"
        return f"RatFunc(({self.num.format()}) / ({self.den.format()}))"

    def format(self, var="x"):
        if self.den == Poly([1]):
            return self.num.format(var)
        return f"({self.num.format(var)}) / ({self.den.format(var)})"
