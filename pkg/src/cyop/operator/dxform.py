"""Monic d/dx form y^(N) + a_{N-1} y^(N-1) + ... + a_0 y and the adjoint."""

from math import comb

from ..errors import DegenerateLeading
from ..exact.poly import Poly, theta_power_expand
from ..exact.ratfunc import RatFunc


class DxForm:
    """Monic operator given by ``coeffs = (a_0, ..., a_{N-1})`` as RatFuncs."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(c if isinstance(c, RatFunc) else RatFunc._lift(c) for c in coeffs)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("DxForm is immutable")

    @classmethod
    def from_polys(cls, polys):
        """Normalise ``sum_j polys[j] * D**j`` by its leading polynomial."""
        polys = list(polys)
        while polys and polys[-1].is_zero():
            polys.pop()
        if len(polys) < 2:
            raise DegenerateLeading("operator has no derivative terms")
        lead = polys[-1]
        return cls(RatFunc(p, lead) for p in polys[:-1])

    @property
    def order(self):
        return len(self.coeffs)

    def a(self, i):
        if i == self.order:
            return RatFunc._lift(1)
        return self.coeffs[i]

    def __eq__(self, other):
        if isinstance(other, DxForm):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def format(self, var="x"):
        parts = [f"D^{self.order}" if self.order > 1 else "D"]
        for i in range(self.order - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("*D" if i == 1 else f"*D^{i}")
            parts.append(f"({c.format(var)}){mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"DxForm({self.format()})"


def dx_polys(op):
    """Polynomials c_j(x) with ``op = sum_j c_j(x) D**j`` (not normalised)."""
    n = op.order
    acc = [Poly() for _ in range(n + 1)]
    for i, p in enumerate(op.theta_polys):
        for k, coef in enumerate(p.coeffs):
            if not coef:
                continue
            for j, s in theta_power_expand(k):
                acc[j] = acc[j] + Poly.monomial(i + j, coef * s)
    return acc


def theta_to_dx(op):
    polys = dx_polys(op)
    if polys[op.order].is_zero():
        raise DegenerateLeading("leading coefficient vanishes after expansion")
    return DxForm.from_polys(polys)


def adjoint(form):
    """``L*(y) = sum_i (-1)**i (a_i y)^(i)``, renormalised to be monic."""
    n = form.order
    derivs = {}

    def deriv(i, k):
        key = (i, k)
        if key not in derivs:
            derivs[key] = form.a(i) if k == 0 else deriv(i, k - 1).derivative()
        return derivs[key]

    out = []
    for m in range(n):
        total = RatFunc._lift(0)
        for i in range(m, n + 1):
            term = deriv(i, i - m) * comb(i, m)
            total = total + term if i % 2 == 0 else total - term
        out.append(total)
    sign = -1 if n % 2 else 1
    return DxForm(c * sign for c in out)
