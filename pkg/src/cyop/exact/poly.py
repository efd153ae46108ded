"""Dense univariate polynomials with exact rational coefficients."""

from fractions import Fraction
from math import gcd, isqrt

from .rational import as_fraction, format_rational

NEG_INF = float("-inf")


def _coerce(value):
    if isinstance(value, Poly):
        return value
    return Poly([as_fraction(value)])


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``var**i``.

    The zero polynomial has an empty coefficient tuple and degree ``NEG_INF``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def linear_factors(cls, shifts, scale=1):
        """``scale * prod (var + s)`` over ``shifts``."""
        p = cls([scale])
        for s in shifts:
            p = p * cls([s, 1])
        return p

    X = None  # set below

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def is_const(self):
        return len(self.coeffs) <= 1

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_fraction(other)
            return Poly([c * a for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        inv_lc = 1 / other.lc
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv_lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def gcd(self, other):
        a, b = self, _coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def theta(self):
        """Apply ``var * d/dvar``."""
        return Poly([i * c for i, c in enumerate(self.coeffs)])

    def __call__(self, value):
        result = 0 * value if not isinstance(value, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def compose(self, inner):
        result = Poly()
        for c in reversed(self.coeffs):
            result = result * inner + Poly([c])
        return result

    def taylor_shift(self, c):
        """Return ``P(var + c)``."""
        return self.compose(Poly([c, 1]))

    def scale_var(self, c):
        """Return ``P(c * var)``."""
        c = as_fraction(c)
        return Poly([a * c**i for i, a in enumerate(self.coeffs)])

    def order_at_zero(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return NEG_INF

    def multiplicity(self, factor):
        """Largest k with ``factor**k`` dividing self (self nonzero)."""
        if self.is_zero():
            raise ValueError("multiplicity in the zero polynomial")
        k, p = 0, self
        while True:
            q, r = divmod(p, factor)
            if not r.is_zero():
                return k
            k, p = k + 1, q

    def primitive_integer(self):
        """Integer coefficient list proportional to self with content 1 and positive lc."""
        if self.is_zero():
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return ints

    def rational_roots(self):
        """Distinct rational roots with multiplicities, sorted ascending."""
        if self.is_zero():
            raise ValueError("roots of the zero polynomial")
        roots = {}
        p = self
        z = p.order_at_zero()
        if z:
            roots[Fraction(0)] = z
            p = Poly(p.coeffs[z:])
        while p.degree > 0:
            r = _find_rational_root(p)
            if r is None:
                break
            m = p.multiplicity(Poly([-r, 1]))
            roots[r] = m
            p = p.exact_div(Poly([-r, 1]) ** m)
        return sorted(roots.items()), p

    def format(self, var="x", mul="*", descending=False):
        if self.is_zero():
            return "0"
        parts = []
        terms = list(enumerate(self.coeffs))
        if descending:
            terms.reverse()
        for i, c in terms:
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}{mul}{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self.format()})"


Poly.X = Poly([0, 1])


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [0]
    factors = {}
    d = 2
    while d * d <= n and d < 10**7:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for prime, e in factors.items():
        divs = [x * prime**k for x in divs for k in range(e + 1)]
    return divs


def _find_rational_root(p):
    ints = p.primitive_integer()
    if len(ints) == 2:
        return Fraction(-ints[0], ints[1])
    if len(ints) == 3:
        roots = quadratic_rational_roots(Poly(ints))
        return roots[0] if roots else None
    for q in _divisors(ints[-1]):
        for num in _divisors(ints[0]):
            for cand in (Fraction(num, q), Fraction(-num, q)):
                if p(cand) == 0:
                    return cand
    return None


def rational_sqrt(value):
    """Exact square root of a nonnegative rational, or None."""
    value = as_fraction(value)
    if value < 0:
        return None
    n, d = value.numerator, value.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def quadratic_rational_roots(p):
    """Rational roots of a degree-2 polynomial (possibly empty)."""
    c, b, a = p[0], p[1], p[2]
    disc = b * b - 4 * a * c
    s = rational_sqrt(disc)
    if s is None:
        return []
    return sorted({(-b - s) / (2 * a), (-b + s) / (2 * a)})


def stirling2_row(k):
    """Coefficients S(k, j), j = 0..k, of the second-kind Stirling numbers."""
    row = [1]
    for n in range(1, k + 1):
        new = [0] * (n + 1)
        for j in range(1, n + 1):
            new[j] = j * (row[j] if j < len(row) else 0) + row[j - 1]
        row = new
    return row


def theta_power_expand(k):
    """Pairs ``(j, S)`` with ``theta**k = sum S * x**j * D**j``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    row = stirling2_row(k)
    return [(j, Fraction(s)) for j, s in enumerate(row) if s]
