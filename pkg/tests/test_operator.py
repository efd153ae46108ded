from fractions import Fraction as F

import pytest
import sympy as sp

from cyop.catalog.entries import get_entry
from cyop.errors import OperatorSyntaxError, WrongOrder
from cyop.exact.poly import Poly
from cyop.exact.ratfunc import RatFunc
from cyop.operator.cy import cy_numerator_coeffs, cy_quantity_Q, cy_quantity_W, printed_Q_eval, satisfies_cy
from cyop.operator.dxform import DxForm, adjoint, theta_to_dx
from cyop.operator.params import DegreeTwoParams, sigma_delta
from cyop.operator.riemann import INFINITY, riemann_symbol
from cyop.operator.theta import ThetaOperator, parse_operator
from cyop.transforms.registry import build_named

QUINTIC = "T^4 - 3125*x*(T+1/5)*(T+2/5)*(T+3/5)*(T+4/5)"
X = sp.symbols("x")


def to_sympy_op(op, y):
    """Apply a theta-form operator to a sympy expression."""
    total = 0
    for i, p in enumerate(op.theta_polys):
        for k, c in enumerate(p.coeffs):
            t = y
            for _ in range(k):
                t = X * sp.diff(t, X)
            total += sp.Rational(c.numerator, c.denominator) * X**i * t
    return total


def test_parse_quintic():
    op = parse_operator(QUINTIC)
    assert op.order == 4 and op.degree == 1
    assert op.P(1) == Poly.linear_factors([F(1, 5), F(2, 5), F(3, 5), F(4, 5)], -3125)


def test_parse_trivial_and_cancellation():
    t = parse_operator("T")
    assert t.order == 1 and t.degree == 0
    op = parse_operator("T^2 - x*(T+1)^2 - x*(T+1)^2 + 2*x*(T+1)^2")
    assert op == parse_operator("T^2") and op.degree == 0


@pytest.mark.parametrize("bad", ["T^", "(T+1", "T**", "T + + ", ")"])
def test_parse_errors_have_positions(bad):
    with pytest.raises(OperatorSyntaxError) as info:
        parse_operator(bad)
    assert info.value.position is not None


def test_format_roundtrip():
    for key in ("D", "bzb:b", "strange", "tilde:3", "sporadic:1"):
        op = build_named(key).op
        assert ThetaOperator.parse(op.format()) == op


def test_theta_to_dx_simple():
    form = theta_to_dx(parse_operator("T^2"))
    assert form.a(1) == RatFunc(Poly([1]), Poly([0, 1])) and form.a(0).is_zero()
    assert theta_to_dx(parse_operator("T")).order == 1


def test_quintic_a3_denominator():
    form = theta_to_dx(parse_operator(QUINTIC))
    den = form.a(3).den
    assert den == Poly([0, 1]) * Poly([F(-1, 3125), 1])
    # sympy oracle for a3
    y = sp.Function("y")(X)
    expr = sp.expand(to_sympy_op(parse_operator(QUINTIC), y))
    lead = expr.coeff(sp.diff(y, X, 4))
    a3 = sp.cancel(expr.coeff(sp.diff(y, X, 3)) / lead)
    ours = sp.cancel(sp.Poly(list(reversed([sp.Rational(c.numerator, c.denominator) for c in form.a(3).num.coeffs])), X).as_expr()
                     / sp.Poly(list(reversed([sp.Rational(c.numerator, c.denominator) for c in den.coeffs])), X).as_expr())
    assert sp.simplify(a3 - ours) == 0


def test_adjoint_second_order():
    a1 = RatFunc(Poly([1]), Poly([0, 1]))
    form = DxForm([RatFunc(Poly()), a1])
    adj = adjoint(form)
    assert adj.a(1) == -a1
    assert adj.a(0) == -a1.derivative()
    assert adjoint(adj) == form


def test_cy_Q_known_operators():
    assert cy_quantity_Q(parse_operator(QUINTIC)).is_zero()
    assert satisfies_cy(get_entry("2.2").operator())
    q = cy_quantity_Q(parse_operator("T^4 - x*T"))
    assert not q.is_zero()


def test_cy_Q_against_sympy():
    # independent evaluation of Q on theta^4 - x theta
    op = parse_operator("T^4 - x*T")
    y = sp.Function("y")(X)
    expr = sp.expand(to_sympy_op(op, y))
    lead = expr.coeff(sp.diff(y, X, 4))
    a = [sp.cancel(expr.coeff(sp.diff(y, X, k)) / lead) for k in range(4)]
    Q = (a[2] * a[3] / 2 - a[1] - a[3] ** 3 / 8 + sp.diff(a[2], X)
         - sp.Rational(3, 4) * a[3] * sp.diff(a[3], X) - sp.diff(a[3], X, 2) / 2)
    ours = cy_quantity_Q(op)
    num = sum(sp.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(ours.num.coeffs))
    den = sum(sp.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(ours.den.coeffs))
    assert sp.simplify(sp.cancel(Q) - num / den) == 0


def test_cy_W():
    assert cy_quantity_W(build_named("sporadic:1").op).is_zero()
    assert cy_quantity_W(build_named("sym2:A").op).is_zero()
    assert not cy_quantity_W(parse_operator("T^3 + x")).is_zero()
    with pytest.raises(WrongOrder):
        cy_quantity_W(parse_operator(QUINTIC))


def test_numerator_coeffs():
    p = DegreeTwoParams(2, 4, 3, 1, 0, 1, exponents=(1, 1, 1, 1))
    assert cy_numerator_coeffs(p) == (0,) * 6
    off = DegreeTwoParams(1, 2, 1, 0, 0, 1, exponents=(0, 1, 3, 7))
    assert cy_numerator_coeffs(off)[5] != 0
    bad = DegreeTwoParams(1, 5, 3, 1, 0, 1, exponents=(1, 1, 1, 1))
    assert cy_numerator_coeffs(bad)[0] == -4 * 5 - 8 * 1 + 8 * 3


def test_printed_Q_forms_vanish_on_main():
    p = DegreeTwoParams(2, 4, 3, 1, 0, 1, exponents=(F(1, 2), F(3, 2), F(1, 3), F(5, 3)))
    assert printed_Q_eval(p, 1) == 0 and printed_Q_eval(p, 2) == 0
    flat = DegreeTwoParams(1, 2, 3, 2, 0, 0, exponents=(1, 1, 1, 1))
    assert printed_Q_eval(flat, 4) == 0


def test_riemann_quintic():
    rs = riemann_symbol(parse_operator(QUINTIC))
    assert rs.at(0).exponents == (0, 0, 0, 0)
    assert rs.at(F(1, 3125)).exponents == (0, 1, 1, 2)
    assert rs.at(INFINITY).exponents == (F(1, 5), F(2, 5), F(3, 5), F(4, 5))


def test_riemann_2_2():
    rs = riemann_symbol(get_entry("2.2").operator())
    assert set(rs.points) == {0, F(-1, 27), F(1, 216), INFINITY}
    assert rs.at(F(1, 216)).exponents == (0, 1, 1, 2)
    assert rs.at(F(-1, 27)).exponents == (0, 1, 1, 2)
    assert rs.at(INFINITY).exponents == (F(1, 3), F(2, 3), F(4, 3), F(5, 3))


def test_riemann_euler():
    rs = riemann_symbol(parse_operator("T^4"))
    assert rs.points == [0, INFINITY]
    assert rs.at(INFINITY).exponents == (0, 0, 0, 0)


def test_sigma_delta():
    sd = sigma_delta((F(1, 2), F(1, 2), F(3, 2), F(3, 2)))
    assert sd.sigma == 2 and sd.delta == F(-3, 2)
    sd = sigma_delta((F(2, 3), F(2, 3), F(7, 6), F(7, 6)))
    assert sd.sigma == F(11, 6) and sd.delta == F(-14, 9)
    assert sigma_delta((1, 2, 3, 7)) is None


def test_convention_flip():
    e = get_entry("2.1")
    plus = e.params.to_plus()
    assert plus.a == -112 and plus.to_minus().a == 112
    assert plus.operator() == e.operator()
