"""Series-level checks of the identities between named and small-family operators."""

from fractions import Fraction as F

from ..errors import BadArity, BadNormalization, DegenerateParams, UnknownPair
from ..exact.poly import Poly
from ..exact.rational import as_fraction
from ..exact.series import PowerSeries
from ..frobenius import frobenius_basis, holomorphic_solution
from ..operator.theta import ThetaOperator
from .registry import BZB, BZB3, TWIST, T, heun2, heun3, hyp5_operator, lin, tilde_operator, tilde_params
from .series_ops import binomial_series, hyp2f1

CHECK_ORDER = 10


def annihilates(op, s):
    return op.apply(s).is_zero()


# -- twist ------------------------------------------------------------------

def twist_check(pair, order=CHECK_ORDER):
    """Y0(-x/Q(x)) = Q(x) y0(x)^2 with y0, Y0 the BZB and BZB' solutions.

    ``pair`` is (bzb key, bzb3 key); the bare letters and the prefixed
    registry keys are both accepted.  Q is taken from the BZB side, so a
    mismatched pair fails rather than raising.
    """
    small, big = (str(k).split(":")[-1] for k in pair)
    if small not in TWIST or big not in BZB3:
        raise UnknownPair(f"no twist identity for {pair!r}")
    Q = TWIST[small][1]
    y0 = holomorphic_solution(heun2(*BZB[small][:3]), order)
    Y0 = holomorphic_solution(heun3(*BZB3[big][:3]), order)
    q = PowerSeries.from_poly(Q, order)
    lhs = Y0.compose(-(PowerSeries.x(order) / q))
    return lhs == q * y0 * y0


def twist_pairs():
    return [(k, v[0]) for k, v in TWIST.items()]


# -- small families ---------------------------------------------------------

ARITY = {"P0": 4, "P1": 5, "P2": 4, "P3": 5, "P4": 4}


def _delta(al, be, s):
    """al^2 + be^2 - s al - s be: Delta for the pairing (al, s-al), (be, s-be)."""
    return al * al + be * be - s * (al + be)


def small_family(which, params, allow_degree_one=False):
    """The operators P0..P4 of the small components, all in plus convention.

    P0(a,e,f,A), P2(a,d,e,A), P4(a,e,f,A), P1(a,d,e,alpha,beta), P3(c,d,e,alpha,beta).
    """
    which = which.upper()
    if which not in ARITY:
        raise BadArity(f"unknown family {which!r}")
    params = [as_fraction(p) for p in params]
    if len(params) != ARITY[which]:
        raise BadArity(f"{which} takes {ARITY[which]} parameters, got {len(params)}")

    if which == "P0":
        a, e, f, A = params
        p1, top = Poly([e, 0, 0, 0, a]), T**4 - A * A
    elif which == "P2":
        a, d, e, A = params
        p1 = Poly([e, d, F(3, 2) * d, d, a])
        f = d * (4 * a - d) / 16
        top = (T + 1) ** 4 - (A - 1) ** 2
    elif which == "P4":
        a, e, f, A = params
        p1 = Poly([e, 4 * a, 6 * a, 4 * a, a])
        top = Poly([A * (8 - A), 32, 24, 8, 1])
    elif which == "P1":
        a, d, e, al, be = params
        D = _delta(al, be, 1)
        if D == 0:
            raise DegenerateParams("P1 needs Delta != 0")
        p1 = Poly([e, d, d * (D - 1) / D, -2 * d / D, a])
        f = -d * (d + a * D) / (D * D)
        top = lin(al, be, 1 - al, 1 - be)
    else:
        c, d, e, al, be = params
        D = _delta(al, be, 3)
        if D == -6:
            raise DegenerateParams("P3 needs Delta != -6")
        a = ((D + 8) * c - (D + 9) * d) / (2 * (D + 6))
        f = (2 * c - 3 * d) * ((D + 4) * c - (D + 3) * d) / (2 * (D + 6) ** 2)
        p1 = Poly([e, d, c, 2 * (c - d), a])
        top = lin(al, be, 3 - al, 3 - be)
    if f == 0:
        if not allow_degree_one:
            raise DegenerateParams(f"{which} with f = 0 has degree one")
        return ThetaOperator([T**4, p1])
    return ThetaOperator([T**4, p1, top * f])


def shift_equivalence_check(a, d, e, A, order=CHECK_ORDER):
    """y solves P2(a,d,e,A) => (1 + d x/4) y solves P0 and y/(1 + (4a-d)x/4) solves P4.

    For d = 0 or d = 4a all three operators drop to degree one and one of
    the prefactors is 1; the check still runs.
    """
    a, d, e, A = (as_fraction(v) for v in (a, d, e, A))
    y = holomorphic_solution(small_family("P2", (a, d, e, A), True), order)
    m = (4 * a - d) * d / 16
    p0 = small_family("P0", (a, e - d / 4, m, A - 1), True)
    p4 = small_family("P4", (a, e + (4 * a - d) / 4, m, A + 3), True)
    up = PowerSeries([1, d / 4], order) * y
    down = y / PowerSeries([1, (4 * a - d) / 4], order)
    return annihilates(p0, up) and annihilates(p4, down)


def sigma_shift_params(a, d, e, al, be):
    """Parameters (c, d, e, alpha, beta) of the P3 operator reached from P1(a,d,e,alpha,beta).

    With Delta the P1 value and m = (d + a Delta)/Delta, the theta^2, theta and
    constant terms move by 6m, 4m and m, and the exponents by one.
    """
    a, d, e, al, be = (as_fraction(v) for v in (a, d, e, al, be))
    D = _delta(al, be, 1)
    m = (d + a * D) / D
    return d * (D - 1) / D + 6 * m, d + 4 * m, e + m, al + 1, be + 1


def sigma_shift_check(a, d, e, al, be, order=CHECK_ORDER):
    """y solves P1(a,d,e,alpha,beta) => y/(Delta + (d + a Delta) x) solves P3."""
    a, d, e, al, be = (as_fraction(v) for v in (a, d, e, al, be))
    D = _delta(al, be, 1)
    if D == 0 or d + a * D == 0:
        raise DegenerateParams("P1 shift needs Delta != 0 and d + a Delta != 0")
    y = holomorphic_solution(small_family("P1", (a, d, e, al, be)), order)
    p3 = small_family("P3", sigma_shift_params(a, d, e, al, be))
    return annihilates(p3, y / PowerSeries([D, d + a * D], order))


def p1_hypergeometric_params(M, N, al, be):
    """P1 parameters of (1 + M x)(theta^4 + N x H(theta))."""
    M, N, al, be = (as_fraction(v) for v in (M, N, al, be))
    D = _delta(al, be, 1)
    return M + N, -N * D, N * al * be * (1 - al) * (1 - be), al, be


def p1_hypergeometric_check(M, N, al, be, order=CHECK_ORDER):
    """P1 at the parameters above equals (1 + Mx) times theta^4 + N x H, H = (T+al)(T+be)(T+1-al)(T+1-be)."""
    hyp = ThetaOperator([T**4, lin(al, be, 1 - al, 1 - be, scale=N)])
    p1 = small_family("P1", p1_hypergeometric_params(M, N, al, be))
    h0, h1 = hyp.P(0), hyp.P(1)
    left = ThetaOperator([h0, h1 + h0 * as_fraction(M), h1 * as_fraction(M)])
    return p1 == left and annihilates(p1, holomorphic_solution(hyp, order))


# -- the (1 - x)^k 2F1^2 series ----------------------------------------------

def misc_third_order(d, k):
    d, k = as_fraction(d), as_fraction(k)
    mid = Poly([(1 - d * d + k * k) / 2, 1, 1])
    return ThetaOperator([T**3, -(Poly([1, 2]) * mid), lin(1 - d, 1, 1 + d)])


def misc_solution(d, k, order=CHECK_ORDER):
    """(1 - x)^k 2F1((1-d+k)/2, (1+d+k)/2; 1; x)^2."""
    d, k = as_fraction(d), as_fraction(k)
    h = hyp2f1((1 - d + k) / 2, (1 + d + k) / 2, 1, order)
    return binomial_series(k, order) * h * h


def solution_identity_check(d, k, order=CHECK_ORDER):
    return annihilates(misc_third_order(d, k), misc_solution(d, k, order))


# -- tilde operators and the fifth-order hypergeometric ---------------------

def wronskian_series(basis):
    """Pure-series part of y0 theta(y1) - y1 theta(y0) for y1 = f0 log x + f1.

    The log terms cancel: y0 theta y1 - y1 theta y0 = f0^2 + f0 theta f1 - f1 theta f0.
    """
    f0, f1 = basis.f0, basis.f1
    return f0 * f0 + f0 * f1.theta() - f1 * f0.theta()


def wronskian5_check(case, order=8, N=None):
    """(1 - 4Nx)^(3/2) W(y0, y1) of the tilde operator solves the order-5 hypergeometric.

    ``N`` overrides the tilde operator's N (the hypergeometric side keeps the
    tabulated one); a wrong N makes the identity fail.
    """
    N0, mu, nu = tilde_params(case)
    n = N0 if N is None else as_fraction(N)
    basis = frobenius_basis(tilde_operator(n, mu, nu), order)
    w = wronskian_series(basis) * binomial_series(F(3, 2), order, -4 * n)
    return annihilates(hyp5_operator(case), w)


# -- the main family ---------------------------------------------------------

def main_family_build(P, Qp, R):
    """theta^2 P theta^2 + theta Qp theta + R for x-polynomials P, Qp, R."""
    P, Qp, R = (p if isinstance(p, Poly) else Poly(p) for p in (P, Qp, R))
    if P(0) != 1 or Qp(0) != 0 or R(0) != 0:
        raise BadNormalization("need P(0) = 1, Qp(0) = 0 and R(0) = 0")
    deg = max(P.degree, Qp.degree, R.degree)
    polys = []
    for i in range(deg + 1):
        p, q, r = P[i], Qp[i], R[i]
        polys.append(Poly([r, i * q, q + i * i * p, 2 * i * p, p]))
    return ThetaOperator(polys)
