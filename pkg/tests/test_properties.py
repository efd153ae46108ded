from fractions import Fraction as F

import sympy as sp
from hypothesis import given, settings, strategies as st

from cyop.exact.poly import Poly
from cyop.exact.series import PowerSeries, format_series, parse_series
from cyop.frobenius import holomorphic_solution, instanton_numbers, lambert_series
from cyop.operator.dxform import adjoint, theta_to_dx
from cyop.operator.theta import ThetaOperator, parse_operator
from cyop.transforms.series_ops import hadamard

X = sp.symbols("x")
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def series(n=6, unit=False):
    head = st.just(F(1)) if unit else rationals
    return st.tuples(head, st.lists(rationals, min_size=n, max_size=n)).map(
        lambda t: PowerSeries([t[0]] + t[1], n))


@st.composite
def operators(draw):
    order = draw(st.integers(1, 4))
    degree = draw(st.integers(1, 2))
    polys = [Poly.monomial(order)]
    for _ in range(degree):
        polys.append(Poly(draw(st.lists(rationals, min_size=order + 1, max_size=order + 1))))
    if all(p.is_zero() for p in polys[1:]):
        polys[1] = Poly([1])
    return ThetaOperator(polys)


def sym(s):
    return sum(sp.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(s.coeffs))


@settings(max_examples=60, deadline=None)
@given(series(), series())
def test_product_matches_sympy(s, t):
    want = sp.expand(sym(s) * sym(t))
    got = sym(s * t)
    assert sp.expand(got - sum(want.coeff(X, k) * X**k for k in range(7))) == 0


@settings(max_examples=60, deadline=None)
@given(series(), series(unit=True))
def test_divide_then_multiply(s, t):
    assert (s / t) * t == s


@settings(max_examples=60, deadline=None)
@given(series(unit=True))
def test_exp_log_round_trip(s):
    assert s.log().exp() == s


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=5, max_size=5))
def test_revert_composes_to_identity(rest):
    s = PowerSeries([0, 1] + rest, 6)
    assert s.compose(s.revert()) == PowerSeries.x(6)
    assert s.revert().compose(s) == PowerSeries.x(6)


@settings(max_examples=60, deadline=None)
@given(series())
def test_series_text_round_trip(s):
    assert parse_series(format_series(s)) == s


@settings(max_examples=60, deadline=None)
@given(operators())
def test_operator_text_round_trip(op):
    assert parse_operator(op.format()) == op


@settings(max_examples=40, deadline=None)
@given(operators())
def test_recursion_solution_is_annihilated(op):
    assert op.apply(holomorphic_solution(op, 8)).is_zero()


@settings(max_examples=40, deadline=None)
@given(operators())
def test_adjoint_is_an_involution(op):
    form = theta_to_dx(op)
    assert adjoint(adjoint(form)) == form


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=7, max_size=7))
def test_lambert_round_trip(n):
    assert instanton_numbers(lambert_series(n, 7), 7) == n


@settings(max_examples=60, deadline=None)
@given(series(), series(), series())
def test_hadamard_algebra(s, t, u):
    assert hadamard(s, t) == hadamard(t, s)
    assert hadamard(hadamard(s, t), u) == hadamard(s, hadamard(t, u))
    assert hadamard(s, t + u) == hadamard(s, t) + hadamard(s, u)


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=6), st.lists(rationals, min_size=1, max_size=4))
def test_poly_divmod(a, b):
    p, q = Poly(a), Poly(b)
    if q.is_zero():
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree
