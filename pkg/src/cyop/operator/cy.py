"""Calabi-Yau conditions: the differential polynomials Q (order 4) and W (order 3)."""

from fractions import Fraction

from ..errors import WrongOrder, WrongShape
from ..exact.poly import Poly
from ..exact.ratfunc import RatFunc
from .dxform import dx_polys
from .params import DegreeTwoParams

# Q * x^2 (1 + a x + f x^2)^3 has the constant term -4b - 8d + 8c with this scale
NUMERATOR_SCALE = Fraction(8)


def _d(p):
    return p.derivative()


def q_numerator_poly(op):
    """Polynomial N with Q = N / L^3, where L is the leading x-polynomial of D^4.

    Substituting a_i = c_i / L into the definition of Q and clearing
    denominators avoids rational-function arithmetic altogether.
    """
    if op.order != 4:
        raise WrongOrder(f"Q needs an order-4 operator, got order {op.order}")
    c = dx_polys(op)
    L, c1, c2, c3 = c[4], c[1], c[2], c[3]
    dL, dc3 = _d(L), _d(c3)
    half, eighth = Fraction(1, 2), Fraction(1, 8)
    return (
        c2 * c3 * L * half
        - c1 * L * L
        - c3 * c3 * c3 * eighth
        + (_d(c2) * L - c2 * dL) * L
        - c3 * (dc3 * L - c3 * dL) * Fraction(3, 4)
        - (_d(dc3) * L * L - dc3 * dL * L * 2 - c3 * _d(dL) * L + c3 * dL * dL * 2) * half
    )


def cy_quantity_Q(op):
    """Q = a2 a3/2 - a1 - a3^3/8 + a2' - 3/4 a3 a3' - a3''/2 for the monic d/dx form."""
    num = q_numerator_poly(op)
    if num.is_zero():
        return RatFunc(Poly())
    L = dx_polys(op)[4]
    return RatFunc(num, L**3)


def cy_quantity_W(op):
    """W = a2''/3 + 2/3 a2 a2' + 4/27 a2^3 + 2 a0 - 2/3 a1 a2 - a1'."""
    if op.order != 3:
        raise WrongOrder(f"W needs an order-3 operator, got order {op.order}")
    c = dx_polys(op)
    L, c0, c1, c2 = c[3], c[0], c[1], c[2]
    dL = _d(L)
    # with a_i = c_i/L, write every term over L^3
    a2p = _d(c2) * L - c2 * dL  # a2' * L^2
    a2pp = (_d(_d(c2)) * L - c2 * _d(dL)) * L - a2p * dL * 2  # a2'' * L^3
    a1p = _d(c1) * L - c1 * dL  # a1' * L^2
    num = (
        a2pp * Fraction(1, 3)
        + c2 * a2p * Fraction(2, 3)
        + c2 * c2 * c2 * Fraction(4, 27)
        + c0 * L * L * 2
        - c1 * c2 * L * Fraction(2, 3)
        - a1p * L
    )
    if num.is_zero():
        return RatFunc(Poly())
    return RatFunc(num, L**3)


def satisfies_cy(op):
    if op.order == 4:
        return q_numerator_poly(op).is_zero()
    if op.order == 3:
        return cy_quantity_W(op).is_zero()
    raise WrongOrder(f"no Calabi-Yau condition implemented for order {op.order}")


def cy_numerator_coeffs(params):
    """Q_0..Q_5: numerator of Q over the denominator x^2 (1 + a x + f x^2)^3."""
    if not isinstance(params, DegreeTwoParams):
        raise WrongShape("expected DegreeTwoParams")
    p = params.to_plus()
    op = p.operator()
    if op.degree > 2 or op.order != 4:
        raise WrongShape("not in the two-term family")
    num = q_numerator_poly(op)
    # L = x^4 (1 + a x + f x^2), so N / x^10 is the numerator over x^2 (...)^3
    if not num.is_zero() and num.order_at_zero() < 10:
        raise WrongShape("unexpected pole order at x = 0")
    coeffs = [num[10 + i] * NUMERATOR_SCALE for i in range(6)]
    if num.degree > 15:
        raise WrongShape("numerator degree exceeds 5")
    return tuple(coeffs)


def printed_Q_eval(params, which):
    """The displayed closed forms of Q1, Q2 and Q4 at a parameter point.

    They assume b = 2(c - d) and exponents alpha, sigma - alpha, beta,
    sigma - beta.  The displayed Q3 contains a corrupted line and is not
    offered.
    """
    if which not in (1, 2, 4):
        raise ValueError("only Q1, Q2 and Q4 have reliable printed forms")
    p = params.to_plus()
    sd = p.sigma_delta()
    if sd is None or sd.pairing is None:
        raise WrongShape("printed forms need rational paired exponents")
    (al, _), (be, _) = sd.pairing
    s = sd.sigma
    a, c, d, f = p.a, p.c, p.d, p.f
    if which == 1:
        return (8*f*al**2*s + 16*f*s*be - 8*f*s**2*be - 16*c**2 + 40*c*d - 24*d**2
                - 8*f*al*s**2 - 16*f*al**2 + 16*f*s**2 - 16*f*be**2 - 32*f*s - 24*d*a
                + 16*c*a + 16*f*al*s + 8*f*s*be**2)
    if which == 2:
        return (-8*f*al**2*c - 8*f*be**2*c + 8*f*be**2*d + 8*f*al**2*d - 8*c*a*d
                + 8*f*s**2*c + 72*f*s*d - 8*f*s**2*d
                + 24*c**2*d - 24*c*d**2 + 8*c**2*a - 64*c*f*s + 24*f*al*s*a
                + 24*f*s*be*a - 16*f*s**2*be*a + 16*f*al**2*s*a
                - 16*f*al*s**2*a + 16*f*s*be**2*a
                - 8*f*al*s*d + 8*f*al*s*c - 8*c**3 + 8*d**3 + 8*f*s*be*c - 8*f*s*be*d
                - 64*d*f - 8*d*a**2 - 24*f*s*a - 24*f*al**2*a + 48*c*f + 24*f*s**2*a
                - 24*f*be**2*a)
    return 8*f**2*(-2*c - al**2*c - 2*s**2*c - 3*s*d + 2*s**2*d + be**2*d - 2*s**2*a
                   - be**2*a - al*s*d
                   + al*s*c + s*be*c - s*be*d + s*be*a - al*s**2*a - s**2*be*a
                   + al*s*a + al**2*s*a + be**2*s*a
                   + s*a - al**2*a + s**3*a + 4*c*s - be**2*c + al**2*d)
