"""Series solutions at a MUM point, mirror map, Yukawa coupling, instanton numbers."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import InsufficientOrder, NotMUM, ResonantRecursion
from .exact.jet import JET_DEPTH, Jet
from .exact.rational import format_rational
from .exact.series import PowerSeries


def holomorphic_solution(op, order):
    """The power series solution with a_0 = 1 from the coefficient recursion.

    P_0(n) a_n + P_1(n-1) a_{n-1} + ... + P_r(n-r) a_{n-r} = 0.
    """
    polys = op.theta_polys
    p0 = polys[0]
    if p0(0) != 0:
        raise ResonantRecursion("P_0(0) != 0: no power series solution starting with 1")
    a = [Fraction(1)]
    for n in range(1, order + 1):
        lead = p0(n)
        if lead == 0:
            raise ResonantRecursion(f"P_0({n}) = 0: the recursion cannot be solved for a_{n}")
        acc = Fraction(0)
        for i in range(1, min(len(polys), n + 1)):
            if a[n - i] and not polys[i].is_zero():
                acc += polys[i](n - i) * a[n - i]
        a.append(-acc / lead)
    return PowerSeries(a, order)


@dataclass(frozen=True)
class FrobeniusBasis:
    """Pure series f_0..f_{N-1} with y_k = sum_{j<=k} log(x)^j/j! * f_{k-j}."""

    parts: tuple
    order: int

    @property
    def f0(self):
        return self.parts[0]

    @property
    def f1(self):
        return self.parts[1]

    @property
    def f2(self):
        return self.parts[2]

    @property
    def f3(self):
        return self.parts[3] if len(self.parts) > 3 else None

    def log_graded(self, k):
        """Components of y_k as coefficients of log(x)^j/j!, j = 0..k."""
        return [self.parts[k - j] for j in range(k + 1)]


def _check_mum(op):
    n = op.order
    if n > JET_DEPTH:
        raise NotMUM(f"order {n} exceeds the supported jet depth {JET_DEPTH}")
    p0 = op.P(0)
    if p0.degree != n or any(p0.coeffs[:n]):
        raise NotMUM("0 is not a MUM point: P_0 is not a multiple of theta^N")
    return p0.lc


def frobenius_basis(op, order):
    """Frobenius basis from the eps-deformed recursion.

    a_n(eps) = -sum_i P_i(n - i + eps) a_{n-i}(eps) / P_0(n + eps), a_0 = 1;
    f_j collects the eps^j coefficients.
    """
    lc = _check_mum(op)
    n_ord = op.order
    polys = op.theta_polys
    coeffs = [Jet([1])]
    for n in range(1, order + 1):
        acc = Jet()
        for i in range(1, min(len(polys), n + 1)):
            if not polys[i].is_zero():
                acc = acc + Jet.poly_at(polys[i], n - i) * coeffs[n - i]
        lead = Jet([n, 1])
        lead = lead * lead * lead * lead if n_ord == 4 else _jet_pow(lead, n_ord)
        coeffs.append(-(acc / (lead * lc)))
    parts = tuple(PowerSeries([c[j] for c in coeffs], order) for j in range(n_ord))
    return FrobeniusBasis(parts, order)


def _jet_pow(j, k):
    out = Jet([1])
    for _ in range(k):
        out = out * j
    return out


def log_graded_residual(op, basis, k):
    """Apply op to y_k; returns the log-graded components (all zero for a solution)."""
    return op.apply_log_graded(basis.log_graded(k))


def q_coordinate(basis):
    """q = x * exp(f1/f0)."""
    t = basis.f1 / basis.f0
    return t.exp().shift(1).truncate(basis.order)


def mirror_map(basis):
    """x as a series in q."""
    return q_coordinate(basis).revert()


def _t_derivative(g, dtdlogx):
    """d/dt with t = log q, i.e. (theta t)^(-1) * theta."""
    return g.theta() / dtdlogx


def yukawa_coupling(basis, order=None):
    """K(q) = (q d/dq)^2 (y2/y0), normalised so that K(0) = 1.

    Uses y2/y0 = t^2/2 + G with G = f2/f0 - (f1/f0)^2 / 2, which is a pure
    power series, so only G has to be differentiated.
    """
    if len(basis.parts) < 3:
        raise InsufficientOrder("the Yukawa coupling needs f0, f1 and f2")
    n = basis.order if order is None else order
    if n > basis.order:
        raise InsufficientOrder(f"q-order {n} exceeds the x-order {basis.order} of the basis")
    f0, f1, f2 = (p.truncate(n) for p in basis.parts[:3])
    r1 = f1 / f0
    G = f2 / f0 - r1 * r1 * Fraction(1, 2)
    dt = r1.theta() + 1
    K_x = _t_derivative(_t_derivative(G, dt), dt) + 1
    x_of_q = (r1.exp().shift(1).truncate(n)).revert()
    return K_x.compose(x_of_q)


def instanton_numbers(K, count=None):
    """Invert K = 1 + sum_d n_d d^3 q^d / (1 - q^d) by divisor sums."""
    if count is None:
        count = K.order
    if count > K.order:
        raise InsufficientOrder(f"{count} instanton numbers need K to order {count}, have {K.order}")
    if K[0] != 1:
        raise ValueError("K must be normalised with K(0) = 1")
    n = [None]
    for m in range(1, count + 1):
        acc = K[m]
        for k in range(1, m):
            if m % k == 0:
                acc -= k**3 * n[k]
        n.append(acc / m**3)
    return n[1:]


def lambert_series(n, order):
    """1 + sum_d n_d d^3 q^d/(1 - q^d) to the given order."""
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    for d, nd in enumerate(n, start=1):
        if d > order or not nd:
            continue
        for m in range(d, order + 1, d):
            coeffs[m] += d**3 * Fraction(nd)
    return PowerSeries(coeffs, order)


def _prime_factors(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class IntegralityReport:
    """Denominator structure of a sequence of rationals.

    ``entries`` lists (index, value, {prime: exponent}) for the non-integral
    values; ``N`` is the least common multiple of all denominators, so every
    value times N is an integer.
    """

    label: str
    entries: tuple
    primes: dict = field(default_factory=dict)
    N: int = 1

    @property
    def integral(self):
        return self.N == 1

    @property
    def status(self):
        if self.integral:
            return "integral"
        return f"N-integral for N = {self.N}"

    def format(self):
        lines = [f"{self.label}: {self.status}"]
        if not self.integral:
            primes = ", ".join(f"{p}^{e}" for p, e in sorted(self.primes.items()))
            lines.append(f"  offending primes: {primes}")
            for idx, value, fac in self.entries:
                den = " * ".join(f"{p}^{e}" for p, e in sorted(fac.items()))
                lines.append(f"  [{idx}] {format_rational(value)}  denominator {den}")
        return "\n".join(lines)


def denominator_report(values, label="values", start=0):
    entries = []
    primes = {}
    N = 1
    for i, v in enumerate(values, start=start):
        v = Fraction(v)
        if v.denominator == 1:
            continue
        fac = _prime_factors(v.denominator)
        entries.append((i, v, fac))
        for p, e in fac.items():
            primes[p] = max(primes.get(p, 0), e)
        N = lcm(N, v.denominator)
    return IntegralityReport(label, tuple(entries), primes, N)


def integrality_report(series=None, n=None):
    """Reports for a series' coefficients and/or an instanton sequence n_1, n_2, ..."""
    reports = []
    if series is not None:
        reports.append(denominator_report(series.coeffs, "series", 0))
    if n is not None:
        reports.append(denominator_report(n, "instantons", 1))
    return reports


@dataclass(frozen=True)
class InstantonReport:
    n: tuple
    q_series: PowerSeries
    yukawa: PowerSeries
    integrality: tuple

    def lambert_check(self):
        return lambert_series(self.n, len(self.n)).agrees_with(self.yukawa.truncate(len(self.n)))


def instanton_report(op, order=12, count=None):
    """Full pipeline: basis, q, K and n_1..n_count."""
    basis = frobenius_basis(op, order)
    q = q_coordinate(basis)
    K = yukawa_coupling(basis)
    count = order if count is None else count
    n = tuple(instanton_numbers(K, count))
    reports = integrality_report(None, n)
    return InstantonReport(n, q, K, tuple(reports))


def reconstruct_check(op, basis):
    """True if every y_k of the basis is annihilated to the truncation order."""
    for k in range(len(basis.parts)):
        for comp in log_graded_residual(op, basis, k):
            if not comp.is_zero():
                return False
    return True


__all__ = [
    "holomorphic_solution", "FrobeniusBasis", "frobenius_basis", "log_graded_residual",
    "q_coordinate", "mirror_map", "yukawa_coupling", "instanton_numbers", "lambert_series",
    "IntegralityReport", "denominator_report", "integrality_report", "InstantonReport",
    "instanton_report", "reconstruct_check",
]
