"""Series-level transforms: Hadamard product, Moebius pullback, 2F1 and binomial series."""

from fractions import Fraction

from ..exact.rational import as_fraction
from ..exact.series import PowerSeries


def hadamard(s, t):
    """Coefficientwise product; the order is the smaller of the two."""
    n = min(s.order, t.order)
    return PowerSeries([s.coeffs[k] * t.coeffs[k] for k in range(n + 1)], n)


def hadamard_all(series):
    out = series[0]
    for s in series[1:]:
        out = hadamard(out, s)
    return out


def moebius_pullback(s, N):
    """Y(x) = y(-x/(1 - N x)) / (1 - N x)."""
    N = as_fraction(N)
    n = s.order
    geom = PowerSeries([N**k for k in range(n + 1)], n)  # 1/(1 - N x)
    inner = -(PowerSeries.x(n) * geom)
    return s.compose(inner) * geom


def rising(a, k):
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def hyp_series(top, bottom, order, z=1):
    """Generalised hypergeometric series pFq(top; bottom; z x) with exact ratios."""
    top = [as_fraction(a) for a in top]
    bottom = [as_fraction(b) for b in bottom]
    z = as_fraction(z)
    coeffs = [Fraction(1)]
    for k in range(order):
        num = z
        for a in top:
            num *= a + k
        den = Fraction(k + 1)
        for b in bottom:
            den *= b + k
        coeffs.append(coeffs[-1] * num / den)
    return PowerSeries(coeffs, order)


def hyp2f1(a, b, c, order):
    return hyp_series([a, b], [c], order)


def binomial_series(k, order, c=-1):
    """(1 + c x)^k for rational k, from the exact binomial coefficients."""
    k, c = as_fraction(k), as_fraction(c)
    coeffs = [Fraction(1)]
    for j in range(order):
        coeffs.append(coeffs[-1] * (k - j) / (j + 1) * c)
    return PowerSeries(coeffs, order)


def rational_power(s, k):
    """s^k for s(0) = 1 and rational k."""
    k = as_fraction(k)
    if k.denominator == 1 and k >= 0:
        return s ** int(k)
    return (s.log() * k).exp()
