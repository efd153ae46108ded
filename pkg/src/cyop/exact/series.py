"""Truncated power series with exact rational coefficients.

Every series carries its truncation order: ``coeffs[k]`` for ``k <= order``
are known exactly, everything above is unknown.  Binary operations return
the smaller of the two orders, and asking for a coefficient past the order
raises :class:`PrecisionError` instead of silently returning zero.
"""

import re
from fractions import Fraction

from ..errors import BadConstantTerm, DivisionByZeroSeries, NotReversible, PrecisionError
from .poly import Poly
from .rational import as_fraction, format_rational, parse_rational


class PowerSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        cs = [as_fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    def __reduce__(self):
        return (PowerSeries, (self.coeffs, self.order))

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def x(cls, order):
        return cls([0, 1], order)

    @classmethod
    def from_poly(cls, poly, order):
        return cls(list(poly.coeffs)[: order + 1], order)

    @classmethod
    def from_function(cls, func, order):
        return cls([func(n) for n in range(order + 1)], order)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return self.coeffs[k]
        if k < 0:
            raise IndexError(k)
        if k > self.order:
            raise PrecisionError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order):
        if order > self.order:
            raise PrecisionError(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1], order)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def agrees_with(self, other):
        """Equality of the coefficients both series know."""
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def is_zero(self):
        return not any(self.coeffs)

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def _lift(self, other):
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([other], self.order)

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __add__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = as_fraction(other)
            return PowerSeries([c * a for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            s = Fraction(0)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s += a[i] * b[k - i]
            out.append(s)
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            c = as_fraction(other)
            if c == 0:
                raise ZeroDivisionError("series divided by zero")
            return self * (1 / c)
        return series_mul_div(self, other, "divide")

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k):
        if k < 0:
            return PowerSeries.one(self.order) / (self ** (-k))
        result, base = PowerSeries.one(self.order), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        return PowerSeries.one(self.order) / self

    def derivative(self):
        """d/dx; the result loses one order of precision."""
        if self.order == 0:
            raise PrecisionError("derivative of an order-0 series has no known coefficients")
        return PowerSeries([k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1)

    def theta(self):
        """x d/dx, which keeps the truncation order."""
        return PowerSeries([k * c for k, c in enumerate(self.coeffs)], self.order)

    def integral(self):
        """Antiderivative with zero constant term."""
        return PowerSeries([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.order + 1)

    def shift(self, k):
        """Multiply by x**k (k >= 0)."""
        return PowerSeries([0] * k + list(self.coeffs), self.order + k)

    def divide_by_x(self, k=1):
        if any(self.coeffs[:k]):
            raise ValueError(f"series not divisible by x^{k}")
        return PowerSeries(self.coeffs[k:], self.order - k)

    def scale_var(self, c):
        """Return s(c * x)."""
        c = as_fraction(c)
        return PowerSeries([a * c**k for k, a in enumerate(self.coeffs)], self.order)

    def compose(self, inner):
        """Return self(inner(x)); inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        result = PowerSeries([self.coeffs[n]], n)
        inner = inner.truncate(n)
        for k in range(n - 1, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def exp(self):
        return series_exp_log(self, "exp")

    def log(self):
        return series_exp_log(self, "log")

    def revert(self):
        return series_revert(self)

    def __repr__(self):
        return f"PowerSeries({format_series(self)})"

    def __str__(self):
        return format_series(self)


def series_mul_div(s, t, mode):
    if mode == "multiply":
        return s * t
    if mode != "divide":
        raise ValueError(f"unknown mode {mode!r}")
    if t.coeffs[0] == 0:
        raise DivisionByZeroSeries("divisor has zero constant term")
    n = min(s.order, t.order)
    b = t.coeffs
    inv0 = 1 / b[0]
    out = []
    for k in range(n + 1):
        acc = s.coeffs[k]
        for i in range(1, k + 1):
            if b[i]:
                acc -= b[i] * out[k - i]
        out.append(acc * inv0)
    return PowerSeries(out, n)


def series_exp_log(s, mode):
    n = s.order
    a = s.coeffs
    if mode == "exp":
        if a[0] != 0:
            raise BadConstantTerm(a[0], f"exp needs constant term 0, got {format_rational(a[0])}")
        # e' = s' e  ->  k e_k = sum_{j=1..k} j a_j e_{k-j}
        e = [Fraction(1)]
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if a[j]:
                    acc += j * a[j] * e[k - j]
            e.append(acc / k)
        return PowerSeries(e, n)
    if mode == "log":
        if a[0] != 1:
            raise BadConstantTerm(a[0], f"log needs constant term 1, got {format_rational(a[0])}")
        # l' = s'/s  ->  k l_k = k a_k - sum_{j=1..k-1} j l_j a_{k-j}
        lg = [Fraction(0)]
        for k in range(1, n + 1):
            acc = k * a[k]
            for j in range(1, k):
                if lg[j] and a[k - j]:
                    acc -= j * lg[j] * a[k - j]
            lg.append(acc / k)
        return PowerSeries(lg, n)
    raise ValueError(f"unknown mode {mode!r}")


def series_revert(s):
    """Compositional inverse r of s = x + O(x^2): s(r(q)) = q."""
    if s.order < 1 or s.coeffs[0] != 0 or s.coeffs[1] != 1:
        raise NotReversible("series must have the form x + O(x^2)")
    n = s.order
    # Newton-free iteration: r_k fixed one coefficient at a time
    r = PowerSeries([0, 1], n)
    for k in range(2, n + 1):
        err = s.compose(r)
        r = PowerSeries(list(r.coeffs[:k]) + [-err.coeffs[k]], n)
    return r


# --- text format -----------------------------------------------------------

def format_series(s, var="x"):
    parts = []
    for k, c in enumerate(s.coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    big_o = f"O({var}^{s.order + 1})"
    if not parts:
        return big_o
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return f"{out} + {big_o}"


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          O\(\s*(?P<ovar>[a-z])\s*(?:\^\s*\(?\s*(?P<oexp>\d+)\s*\)?)?\s*\)
        | (?P<coef>\d+(?:\s*/\s*\d+)?)?\s*\*?\s*
          (?:(?P<var>[a-z])(?:\s*\^\s*(?P<exp>\d+))?)?
        )\s*""",
    re.X,
)


def parse_series(text, var="x"):
    """Parse ``c0 + c1*x + ... + ck*x^k + O(x^(k+1))``."""
    pos = 0
    coeffs = {}
    order = None
    first = True
    text = text.strip()
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse series near position {pos}: {text[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator at position {pos}")
        first = False
        pos = m.end()
        if m.group("ovar") is not None:
            if m.group("ovar") != var:
                raise ValueError(f"unexpected variable {m.group('ovar')!r}")
            order = int(m.group("oexp") or 1) - 1
            continue
        if m.group("coef") is None and m.group("var") is None:
            raise ValueError(f"empty term at position {pos}")
        c = parse_rational(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        k = 0
        if m.group("var") is not None:
            if m.group("var") != var:
                raise ValueError(f"unexpected variable {m.group('var')!r}")
            k = int(m.group("exp") or 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
    if order is None:
        raise ValueError("series text needs an O(x^n) truncation term")
    if coeffs and max(coeffs) > order:
        raise ValueError("term beyond the stated truncation order")
    return PowerSeries([coeffs.get(k, 0) for k in range(order + 1)], order)


def poly_to_series(poly, order):
    return PowerSeries.from_poly(poly, order)


def series_to_poly(s):
    return Poly(s.coeffs)
