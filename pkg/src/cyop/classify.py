"""Component membership for degree-two operators of order four and three."""

import random
from enum import Enum
from fractions import Fraction as F

from .errors import DegenerateParams, InvariantViolation, WrongShape
from .exact.poly import Poly, quadratic_rational_roots
from .operator.cy import cy_numerator_coeffs, cy_quantity_W
from .operator.params import DegreeTwoParams, SigmaDelta, sigma_delta  # noqa: F401  (re-export)
from .operator.theta import ThetaOperator


class ComponentLabel(str, Enum):
    Main = "Main"
    Sigma1 = "Sigma1"
    Sigma3 = "Sigma3"
    Sigma0 = "Sigma0"
    SmallSigma2 = "SmallSigma2"
    Sigma4 = "Sigma4"
    Transverse = "Transverse"
    NotOnVariety = "NotOnVariety"
    FZero = "FZero"

    def __str__(self):
        return self.value


COMPONENTS = (ComponentLabel.Main, ComponentLabel.Sigma1, ComponentLabel.Sigma3,
              ComponentLabel.Sigma0, ComponentLabel.SmallSigma2, ComponentLabel.Sigma4,
              ComponentLabel.Transverse)


class Order3Label(str, Enum):
    MainM = "MainM"
    TransverseT = "TransverseT"
    OnVarietyOther = "OnVarietyOther"
    Off = "Off"

    def __str__(self):
        return self.value


def component_relations(params):
    """The defining relations of every component, evaluated at ``params``.

    Returns {label: [(text, value), ...]}; a point lies on a component when
    all of that component's values vanish.  Needs f != 0 and a pairing.
    """
    p = params.to_plus()
    sd = p.sigma_delta()
    if sd is None:
        return None
    s, D = sd.sigma, sd.delta
    a, c, d, f = p.a, p.c, p.d, p.f
    A = -D  # the sigma = 3 relations are printed in A + B = -Delta
    rel = {
        ComponentLabel.Main: [("sigma-2", s - 2), ("a-(c-d)", a - (c - d))],
        ComponentLabel.Sigma1: [
            ("sigma-1", s - 1),
            ("c*D-d*(D-1)", c * D - d * (D - 1)),
            ("d*(a-(c-d))+f*D", d * (a - (c - d)) + f * D),
            ("c*(a-(c-d))+f*(D-1)", c * (a - (c - d)) + f * (D - 1)),
        ],
        ComponentLabel.Sigma3: [
            ("sigma-3", s - 3),
            ("2(6+D)a-(8+D)c+(9+D)d", 2 * (6 + D) * a - (8 + D) * c + (9 + D) * d),
            ("2(6+D)^2 f-(2c-3d)((4+D)c-(3+D)d)",
             2 * (6 + D) ** 2 * f - (2 * c - 3 * d) * ((4 + D) * c - (3 + D) * d)),
            ("D+6 != 0", F(0) if D != -6 else F(1)),
            # two of the printed relations, with their A = -Delta
            ("4a^2-4c^2-3ad+11cd-7d^2-3fA+20f",
             4*a*a - 4*c*c - 3*a*d + 11*c*d - 7*d*d - 3*f*A + 20*f),
            ("2aA-cA+dA-12a+8c-9d", 2*a*A - c*A + d*A - 12*a + 8*c - 9*d),
            ("2c^2A-5cdA+3d^2A+2fA^2-8c^2+18cd-9d^2-24fA+72f",
             2*c*c*A - 5*c*d*A + 3*d*d*A + 2*f*A*A - 8*c*c + 18*c*d - 9*d*d - 24*f*A + 72*f),
        ],
        ComponentLabel.Sigma0: [("sigma", s), ("c", c), ("d", d), ("D", D)],
        ComponentLabel.SmallSigma2: [
            ("sigma-2", s - 2), ("4ad-d^2-16f", 4 * a * d - d * d - 16 * f),
            ("2c-3d", 2 * c - 3 * d), ("D+2", D + 2),
        ],
        ComponentLabel.Sigma4: [
            ("sigma-4", s - 4), ("6a-c", 6 * a - c), ("2c-3d", 2 * c - 3 * d), ("D+8", D + 8),
        ],
        ComponentLabel.Transverse: [
            ("a^2-4f", a * a - 4 * f),
            ("a*sigma-2(c-d)", a * s - 2 * (c - d)),
            ("a*D+2d", a * D + 2 * d),
            ("-f*D^2+d^2", -f * D * D + d * d),
            ("ad+2fD", a * d + 2 * f * D),
            ("d*sigma+c*D-d*D", d * s + c * D - d * D),
            ("f*sigma*D-f*D^2+cd", f * s * D - f * D * D + c * d),
            ("-f*sigma^2+f*sigma*D+c^2-cd", -f * s * s + f * s * D + c * c - c * d),
            ("ac-2f*sigma+2fD", a * c - 2 * f * s + 2 * f * D),
        ],
    }
    return rel


def classify_order4(params):
    """Set of component labels whose defining relations all hold.

    Points with f = 0 give {FZero}; points off the variety give
    {NotOnVariety}.  A point on the variety that lies on none of the seven
    components (the Delta = 0 sub-loci) gives the empty set.
    """
    p = params.to_plus()
    if p.f == 0:
        return frozenset({ComponentLabel.FZero})
    if p.b != 2 * (p.c - p.d):
        return frozenset({ComponentLabel.NotOnVariety})
    rel = component_relations(p)
    if rel is None:
        return frozenset({ComponentLabel.NotOnVariety})
    labels = frozenset(lab for lab, eqs in rel.items() if all(v == 0 for _, v in eqs))
    coeffs = cy_numerator_coeffs(p)
    on_variety = not any(coeffs)
    if labels and not on_variety:
        raise InvariantViolation("component member with nonzero Q", None, {"labels": sorted(labels)})
    if not labels and not on_variety:
        return frozenset({ComponentLabel.NotOnVariety})
    return labels


# -- order three ------------------------------------------------------------

def match_main_m(op):
    """(u, v, f, k) with op = T^3 + x(2T+1)(uT^2+uT+v) + f x^2 (T+1)(T^2+2T+k), or None."""
    p1, p2 = op.P(1), op.P(2)
    q, r = divmod(p1, Poly([1, 2]))
    if not r.is_zero() or q.degree > 2 or q[2] != q[1]:
        return None
    if p2.is_zero() or p2.degree != 3:
        return None
    f = p2.lc
    rest, r = divmod(p2 * (1 / f), Poly([1, 1]))
    if not r.is_zero() or rest[1] != 2:
        return None
    return q[2], q[0], f, rest[0]


def match_transverse_t(op):
    """(a, s, p) with op = T^3 + a/4 x(4T^3+3sT^2+(s+2p)T+p) + (a/2)^2 x^2 (T^2+sT+p)(T+s/2).

    s = alpha + beta, p = alpha beta.  The x^2 factor is (a/2)^2, so that
    1 + a x + f x^2 is a square as in order four; with (a/4)^2 W does not vanish.
    """
    p1, p2 = op.P(1), op.P(2)
    a = p1[3]
    if a == 0:
        return None
    h = a / 4
    s, p = p1[2] / (3 * h), p1[0] / h
    if p1 != Poly([p, s + 2 * p, 3 * s, 4]) * h:
        return None
    if p2 != Poly([p, s, 1]) * Poly([s / 2, 1]) * (4 * h * h):
        return None
    return a, s, p


def classify_order3(op):
    if op.order != 3 or op.degree > 2:
        raise WrongShape(f"expected order 3 and degree <= 2, got order {op.order}, degree {op.degree}")
    op = op.normalized()
    if op.P(0) != Poly.monomial(3):
        raise WrongShape("P_0 must be theta^3")
    if not cy_quantity_W(op).is_zero():
        return Order3Label.Off
    if op.degree == 2 and match_main_m(op):
        return Order3Label.MainM
    if op.degree == 2 and match_transverse_t(op):
        return Order3Label.TransverseT
    return Order3Label.OnVarietyOther


def main_m_alpha(op):
    """The exponent alpha of an (m) operator, if rational (alpha(2 - alpha) = k)."""
    m = match_main_m(op.normalized())
    if m is None:
        return None
    roots = quadratic_rational_roots(Poly([m[3], -2, 1]))
    return min(roots) if roots else None


# -- sampling ---------------------------------------------------------------

def _rand(rng, lo=-9, hi=9, den=6):
    while True:
        v = F(rng.randint(lo, hi), rng.randint(1, den))
        if v != 0:
            return v


def _quartic(sigma, A, B):
    return Poly([A, sigma, 1]) * Poly([B, sigma, 1])


def _paired(sigma, al, be):
    return (al, sigma - al, be, sigma - be)


def component_sample(label, seed):
    """A pseudo-random point on a component, deterministic in ``seed``."""
    from .transforms.identities import small_family

    label = ComponentLabel(label)
    rng = random.Random(f"{label.value}:{seed}")
    while True:
        try:
            p = _sample_once(label, rng, small_family)
        except (ZeroDivisionError, DegenerateParams):
            continue
        if p is not None and p.f != 0:
            return p


def _sample_once(label, rng, small_family):
    r = lambda: _rand(rng)  # noqa: E731
    L = ComponentLabel
    if label == L.Main:
        a, d, e, f, al, be = r(), r(), r(), r(), r(), r()
        c = a + d
        return DegreeTwoParams(a, 2 * (c - d), c, d, e, f, exponents=_paired(2, al, be))
    if label == L.Sigma1:
        al, be = r(), r()
        if al * al + be * be - al - be == 0:
            return None
        return DegreeTwoParams.from_operator(small_family("P1", (r(), r(), r(), al, be)))
    if label == L.Sigma3:
        al, be = r(), r()
        if al * al + be * be - 3 * (al + be) == -6:
            return None
        return DegreeTwoParams.from_operator(small_family("P3", (r(), r(), r(), al, be)))
    if label == L.Sigma0:
        a, e, f, A = r(), r(), r(), r()
        return DegreeTwoParams(a, 0, 0, 0, e, f, quartic=_quartic(0, A, -A))
    if label == L.SmallSigma2:
        a, d, e, A = r(), r(), r(), r()
        c = 3 * d / 2
        return DegreeTwoParams(a, 2 * (c - d), c, d, e, (4 * a * d - d * d) / 16,
                               quartic=_quartic(2, A, 2 - A))
    if label == L.Sigma4:
        a, e, f, A = r(), r(), r(), r()
        c, d = 6 * a, 4 * a
        return DegreeTwoParams(a, 2 * (c - d), c, d, e, f, quartic=_quartic(4, A, 8 - A))
    if label == L.Transverse:
        sigma, al, be, d, e = r(), r(), r(), r(), r()
        D = al * al + be * be - sigma * (al + be)
        if D == 0 or sigma == 1 or sigma * (sigma - 1) + D == 0 or 2 * sigma + D == 0:
            return None
        a, c, f = -2 * d / D, -(sigma - D) * d / D, (d / D) ** 2
        return DegreeTwoParams(a, 2 * (c - d), c, d, e, f, exponents=_paired(sigma, al, be))
    raise ValueError(f"no sampler for {label}")


def intersection_witness(d=4, A=F(1, 3), e=1):
    """A point on both sigma = 2 components: Delta = -2, 2a = d, 2c = 3d, f = d^2/16."""
    d, A = F(d), F(A)
    a, c = d / 2, 3 * d / 2
    return DegreeTwoParams(a, 2 * (c - d), c, d, e, d * d / 16, quartic=_quartic(2, A, 2 - A))


__all__ = [
    "ComponentLabel", "COMPONENTS", "Order3Label", "SigmaDelta", "sigma_delta",
    "component_relations", "classify_order4", "classify_order3", "match_main_m",
    "match_transverse_t", "main_m_alpha", "component_sample", "intersection_witness",
]
