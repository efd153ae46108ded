"""Exponents at 0, infinity and the finite singular points."""

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import HighDegreeDiscriminant, IrregularSingularity
from ..exact.poly import Poly
from ..exact.quadext import QuadExt, quadratic_roots
from ..exact.rational import format_rational
from .dxform import theta_to_dx

INFINITY = "infinity"


@dataclass(frozen=True)
class RiemannEntry:
    point: object  # 0, INFINITY, Fraction or QuadExt
    exponents: tuple
    unsolved: Poly = None  # residual indicial factor without rational/quadratic roots
    minimal_poly: Poly = None  # for irrational points

    def point_text(self, digits=6):
        if self.point == INFINITY:
            return "inf"
        if isinstance(self.point, QuadExt):
            return f"{self.point.numeric(digits)} [{self.point}]"
        return format_rational(self.point)


@dataclass(frozen=True)
class RiemannSymbol:
    entries: tuple = field(default_factory=tuple)

    def at(self, point):
        for e in self.entries:
            if e.point == point:
                return e
        raise KeyError(point)

    @property
    def points(self):
        return [e.point for e in self.entries]

    def format(self, digits=6):
        lines = []
        for e in self.entries:
            exps = ", ".join(str(v) if isinstance(v, QuadExt) else format_rational(v) for v in e.exponents)
            if e.unsolved is not None:
                extra = f"roots of {e.unsolved.format('r', descending=True)}"
                exps = f"{exps}, {extra}" if exps else extra
            lines.append(f"{e.point_text(digits)}: {exps}")
        return "\n".join(lines)


def _sort_key(v):
    return complex(v).real if isinstance(v, QuadExt) else float(v)


def _roots_with_residual(poly):
    """Rational roots (with multiplicity), quadratic roots, and an unsolved rest."""
    roots, rest = poly.rational_roots()
    values = []
    for r, m in roots:
        values += [r] * m
    unsolved = None
    if rest.degree == 2:
        values += quadratic_roots(rest)
    elif rest.degree > 2:
        unsolved = rest.monic()
    return values, unsolved


def _indicial_from_coeffs(cs):
    """sum_i c_i * r(r-1)...(r-i+1) with c_N = 1."""
    total = Poly()
    falling = Poly([1])
    for i, c in enumerate(cs):
        total = total + falling * c
        falling = falling * Poly([-i, 1])
    return total


def _limit_at_rational(rf, x0, power):
    """lim_{x -> x0} (x - x0)**power * rf(x) for a reduced RatFunc."""
    if rf.is_zero():
        return Fraction(0)
    lin = Poly([-x0, 1])
    k = rf.num.multiplicity(lin)
    m = rf.den.multiplicity(lin)
    order = power + k - m
    if order < 0:
        raise IrregularSingularity(f"coefficient has a pole of excess order {-order} at {format_rational(x0)}")
    if order > 0:
        return Fraction(0)
    num = rf.num.exact_div(lin**k)
    den = rf.den.exact_div(lin**m)
    return num(x0) / den(x0)


def _limit_at_quadratic(rf, x0, mu, power):
    """Same limit at a root x0 of the irreducible monic quadratic mu."""
    if rf.is_zero():
        return QuadExt(0, 0, x0.D)
    k = rf.num.multiplicity(mu)
    m = rf.den.multiplicity(mu)
    order = power + k - m
    if order < 0:
        raise IrregularSingularity(f"coefficient has a pole of excess order {-order} at {x0}")
    if order > 0:
        return QuadExt(0, 0, x0.D)
    num = rf.num.exact_div(mu**k)
    den = rf.den.exact_div(mu**m)
    # mu = (x - x0)(x - x0'), so the surviving factor is (x0 - x0')**(k - m)
    gap = x0 - x0.conjugate()
    return gap ** (k - m) * num(x0) / den(x0)


def _exponents_over_quadratic(coeffs):
    """Roots of an indicial polynomial whose coefficients live in Q(sqrt D)."""
    if all(c.is_rational() for c in coeffs):
        return _roots_with_residual(Poly([c.rational_value() for c in coeffs]))
    # rational roots of the polynomial are rational roots of its norm
    conj = [c.conjugate() for c in coeffs]
    norm = [QuadExt(0, 0, coeffs[0].D)] * (2 * len(coeffs) - 1)
    norm = list(norm)
    for i, a in enumerate(coeffs):
        for j, b in enumerate(conj):
            norm[i + j] = norm[i + j] + a * b
    norm_poly = Poly([c.rational_value() for c in norm])
    candidates, _ = norm_poly.rational_roots()
    values = []
    rest = list(coeffs)
    for r, _ in candidates:
        while len(rest) > 1:
            val = QuadExt(0, 0, coeffs[0].D)
            for c in reversed(rest):
                val = val * r + c
            if val != 0:
                break
            # synthetic division by (rho - r)
            out = [rest[-1]]
            for c in reversed(rest[1:-1]):
                out.append(c + out[-1] * r)
            rest = list(reversed(out))
            values.append(r)
    if len(rest) == 2:
        values.append(-rest[0] / rest[1])
        rest = rest[1:]
    # whatever is left has no rational roots; report the norm of the residue
    unsolved = norm_poly if len(rest) > 1 else None
    return values, unsolved


def riemann_symbol(op):
    n = op.order
    entries = []
    p0 = op.P(0)
    if p0.degree != n:
        raise IrregularSingularity("x = 0 is not a regular singular point")
    exps, rest = _roots_with_residual(p0)
    entries.append(RiemannEntry(Fraction(0), tuple(sorted(exps, key=_sort_key)), rest))

    form = theta_to_dx(op)
    lead = op.leading_x_poly()
    finite = []
    roots, rest = lead.rational_roots()
    for r, _ in roots:
        if r != 0:
            finite.append((r, None))
    if rest.degree > 0:
        for factor in _split_quadratics(rest):
            mu = factor.monic()
            for x0 in quadratic_roots(mu):
                finite.append((x0, mu))
    for x0, mu in finite:
        if mu is None:
            cs = [_limit_at_rational(form.a(i), x0, n - i) for i in range(n)] + [Fraction(1)]
            values, unsolved = _roots_with_residual(_indicial_from_coeffs(cs))
        else:
            cs = [_limit_at_quadratic(form.a(i), x0, mu, n - i) for i in range(n)]
            cs.append(QuadExt(1, 0, x0.D))
            poly_q = _indicial_quad(cs)
            values, unsolved = _exponents_over_quadratic(poly_q)
        entries.append(RiemannEntry(x0, tuple(sorted(values, key=_sort_key)), unsolved, mu))

    pr = op.P(op.degree)
    if pr.degree != n:
        raise IrregularSingularity("infinity is not a regular singular point")
    inf_poly = pr.scale_var(-1)
    values, unsolved = _roots_with_residual(inf_poly)
    entries.append(RiemannEntry(INFINITY, tuple(sorted(values, key=_sort_key)), unsolved))

    head, *middle, tail = entries
    middle.sort(key=lambda e: _sort_key(e.point))
    return RiemannSymbol(tuple([head] + middle + [tail]))


def _indicial_quad(cs):
    """Coefficient list (in rho) of sum c_i * falling(rho, i) over Q(sqrt D)."""
    D = cs[0].D if isinstance(cs[0], QuadExt) else cs[-1].D
    zero = QuadExt(0, 0, D)
    total = [zero] * len(cs)
    falling = Poly([1])
    for i, c in enumerate(cs):
        for j, v in enumerate(falling.coeffs):
            total[j] = total[j] + c * v
        falling = falling * Poly([-i, 1])
    return total


def _split_quadratics(poly):
    """Split a polynomial without rational roots into quadratic factors.

    Only squarefree decomposition and the degree-2 case are handled; anything
    else raises HighDegreeDiscriminant with numeric root locations.
    """
    sqfree = poly.exact_div(poly.gcd(poly.derivative())) if poly.degree > 1 else poly
    if sqfree.degree <= 2:
        return [sqfree]
    roots = numeric_roots(sqfree)
    shown = ", ".join(f"{complex(r):.6g}" for r in roots)
    raise HighDegreeDiscriminant(
        f"singular points are roots of {sqfree.format()} (degree {sqfree.degree}); numerically {shown}"
    )


def numeric_roots(poly, iterations=500):
    """Complex roots by Durand-Kerner iteration (display only)."""
    cs = [complex(float(c)) for c in poly.monic().coeffs]
    n = len(cs) - 1
    roots = [complex(0.4, 0.9) ** k for k in range(n)]
    for _ in range(iterations):
        new = []
        for i, r in enumerate(roots):
            val = 0j
            for c in reversed(cs):
                val = val * r + c
            den = 1 + 0j
            for j, other in enumerate(roots):
                if j != i:
                    den *= r - other
            new.append(r - val / den if den else r)
        roots = new
    return roots
