"""Parameters of the two-term family of fourth-order operators.

Plus convention::

    theta^4 + x*(a theta^4 + b theta^3 + c theta^2 + d theta + e) + f x^2 * R(theta)

with R monic of degree 4; when R splits over Q it is prod (theta + alpha_i).
The minus convention flips the sign of the x-term; it is converted by
negating a, b, c, d, e.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..errors import WrongShape
from ..exact.poly import Poly
from ..exact.rational import as_fraction
from .theta import ThetaOperator

THETA4 = Poly([0, 0, 0, 0, 1])


@dataclass(frozen=True)
class SigmaDelta:
    sigma: Fraction
    delta: Fraction
    A: Fraction = None
    B: Fraction = None
    pairing: tuple = None


@dataclass(frozen=True)
class DegreeTwoParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction
    exponents: tuple = None
    quartic: Poly = None
    sign_convention: str = "plus"

    def __post_init__(self):
        for name in "abcdef":
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.sign_convention not in ("plus", "minus"):
            raise ValueError(f"unknown sign convention {self.sign_convention!r}")
        if self.exponents is not None:
            exps = tuple(as_fraction(v) for v in self.exponents)
            if len(exps) != 4:
                raise ValueError("need four exponents")
            object.__setattr__(self, "exponents", exps)
            quartic = Poly.linear_factors(exps)
            if self.quartic is not None and self.quartic != quartic:
                raise ValueError("exponents and quartic disagree")
            object.__setattr__(self, "quartic", quartic)
        elif self.quartic is not None:
            q = self.quartic if isinstance(self.quartic, Poly) else Poly(self.quartic)
            if q.degree != 4:
                raise ValueError("the x^2 part must be a quartic in theta")
            q = q.monic()
            object.__setattr__(self, "quartic", q)
            roots, rest = q.rational_roots()
            if rest.degree == 0:
                exps = []
                for r, m in roots:
                    exps += [-r] * m
                object.__setattr__(self, "exponents", tuple(sorted(exps)))
        elif self.f != 0:
            raise ValueError("f != 0 needs exponents or a quartic")

    @property
    def alpha(self):
        return self.exponents[0] if self.exponents else None

    @property
    def beta(self):
        return self.exponents[1] if self.exponents else None

    @property
    def gamma(self):
        return self.exponents[2] if self.exponents else None

    @property
    def delta(self):
        return self.exponents[3] if self.exponents else None

    def with_values(self, **changes):
        fields = dict(a=self.a, b=self.b, c=self.c, d=self.d, e=self.e, f=self.f,
                      exponents=self.exponents, quartic=self.quartic,
                      sign_convention=self.sign_convention)
        if "exponents" in changes and "quartic" not in changes:
            fields["quartic"] = None
        if "quartic" in changes and "exponents" not in changes:
            fields["exponents"] = None
        fields.update(changes)
        return DegreeTwoParams(**fields)

    def to_plus(self):
        if self.sign_convention == "plus":
            return self
        return self.with_values(a=-self.a, b=-self.b, c=-self.c, d=-self.d, e=-self.e,
                                sign_convention="plus")

    def to_minus(self):
        if self.sign_convention == "minus":
            return self
        return self.with_values(a=-self.a, b=-self.b, c=-self.c, d=-self.d, e=-self.e,
                                sign_convention="minus")

    def linear_poly(self):
        """The theta-polynomial multiplying x, with the sign of the convention."""
        p = Poly([self.e, self.d, self.c, self.b, self.a])
        return p if self.sign_convention == "plus" else -p

    def operator(self):
        polys = [THETA4, self.linear_poly()]
        if self.f != 0:
            polys.append(self.quartic * self.f)
        return ThetaOperator(polys)

    def sigma_delta(self):
        """Pair-sum and Delta read off the quartic, or None if no pairing exists."""
        if self.quartic is None:
            return None
        return quartic_sigma_delta(self.quartic, self.exponents)

    @classmethod
    def from_operator(cls, op):
        """Read the plus-convention parameters off a theta-form operator."""
        if op.order != 4 or op.degree > 2:
            raise WrongShape(f"expected order 4 and degree <= 2, got order {op.order}, degree {op.degree}")
        op = op.normalized()
        if op.P(0) != THETA4:
            raise WrongShape("P_0 must be theta^4")
        p1 = op.P(1)
        e, d, c, b, a = (p1[i] for i in range(5))
        p2 = op.P(2)
        if p2.is_zero():
            return cls(a, b, c, d, e, 0)
        if p2.degree != 4:
            raise WrongShape("x^2 coefficient must have degree 4 in theta")
        return cls(a, b, c, d, e, p2.lc, quartic=p2.monic())

    def __str__(self):
        vals = " ".join(f"{k}={getattr(self, k)}" for k in "abcdef")
        if self.exponents is not None:
            ex = ",".join(str(v) for v in self.exponents)
        else:
            ex = "roots of " + self.quartic.format("T", descending=True) if self.quartic else "-"
        return f"{vals} exps={ex} ({self.sign_convention})"


def quartic_sigma_delta(quartic, exponents=None):
    """sigma and Delta for ``quartic = (T^2 + s T + A)(T^2 + s T + B)``.

    Works from the coefficients alone, so complex conjugate exponents are fine.
    """
    q = quartic.monic()
    c3, c2, c1, c0 = q[3], q[2], q[1], q[0]
    sigma = c3 / 2
    delta = sigma * sigma - c2
    if c1 != -sigma * delta:
        return None
    pairing = None
    A = B = None
    if exponents is not None:
        sd = sigma_delta(exponents)
        if sd is not None:
            return sd
    # A, B are the roots of z^2 + delta z + c0; report them only if rational
    from ..exact.poly import quadratic_rational_roots

    roots = quadratic_rational_roots(Poly([c0, delta, 1]))
    if roots:
        A = roots[0]
        B = -delta - A
    return SigmaDelta(sigma, delta, A, B, pairing)


def sigma_delta(exponents):
    """Split four exponents into two pairs with equal sums.

    Returns a :class:`SigmaDelta` for the lexicographically smallest valid
    pairing, or None when no pairing exists.
    """
    exps = [as_fraction(v) for v in exponents]
    if len(exps) != 4:
        raise ValueError("need four exponents")
    candidates = []
    idx = range(4)
    for pair in combinations(idx, 2):
        if 0 not in pair:
            continue
        rest = tuple(i for i in idx if i not in pair)
        if exps[pair[0]] + exps[pair[1]] == exps[rest[0]] + exps[rest[1]]:
            p1 = tuple(sorted((exps[pair[0]], exps[pair[1]])))
            p2 = tuple(sorted((exps[rest[0]], exps[rest[1]])))
            candidates.append(tuple(sorted((p1, p2))))
    if not candidates:
        return None
    pairing = min(candidates)
    (al, _), (be, _) = pairing
    sigma = pairing[0][0] + pairing[0][1]
    A = al * (sigma - al)
    B = be * (sigma - be)
    delta = al * al + be * be - sigma * (al + be)
    assert delta == -(A + B)
    # any valid pairing has sigma = total/2 and Delta = (sum of squares)/2 - sigma^2
    assert 2 * sigma == sum(exps)
    assert delta == sum(v * v for v in exps) / 2 - sigma * sigma
    return SigmaDelta(sigma, delta, A, B, pairing)
