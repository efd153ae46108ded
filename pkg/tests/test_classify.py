from fractions import Fraction as F

import pytest

from cyop.catalog.entries import get_entry
from cyop.classify import (COMPONENTS, ComponentLabel as L, Order3Label, classify_order3, classify_order4,
                           component_relations, component_sample, intersection_witness, main_m_alpha)
from cyop.errors import WrongShape
from cyop.exact.poly import Poly
from cyop.operator.cy import cy_numerator_coeffs, cy_quantity_W
from cyop.operator.params import DegreeTwoParams
from cyop.operator.theta import ThetaOperator, parse_operator
from cyop.transforms.registry import build_named


def test_catalog_rows():
    assert classify_order4(get_entry("2.1").params) == {L.Main}
    assert classify_order4(get_entry("2.67").params) == {L.Transverse}


def test_degree_one_is_fzero():
    q = parse_operator("T^4 - 3125*x*(T+1/5)*(T+2/5)*(T+3/5)*(T+4/5)")
    assert classify_order4(DegreeTwoParams.from_operator(q)) == {L.FZero}


def test_off_variety():
    p = DegreeTwoParams(1, 5, 3, 1, 0, 1, exponents=(1, 1, 1, 1))
    assert classify_order4(p) == {L.NotOnVariety}


@pytest.mark.parametrize("label", COMPONENTS)
def test_samples_lie_on_their_component(label):
    for seed in range(20):
        p = component_sample(label, seed)
        assert cy_numerator_coeffs(p) == (0,) * 6
        assert label in classify_order4(p)
        assert classify_order4(p.to_minus()) == classify_order4(p)
    assert component_sample(label, 3) == component_sample(label, 3)


def test_transverse_sample_equations():
    p = component_sample(L.Transverse, 7)
    assert all(v == 0 for _, v in component_relations(p)[L.Transverse])


def test_intersection():
    assert classify_order4(intersection_witness()) == {L.Main, L.SmallSigma2}


def test_order_three():
    assert classify_order3(build_named("bzb3:eta").op) == Order3Label.MainM
    assert main_m_alpha(build_named("bzb3:eta").op) == 1
    assert classify_order3(build_named("sym2:A").op) == Order3Label.MainM
    assert classify_order3(parse_operator("T^3 + x")) == Order3Label.Off
    with pytest.raises(WrongShape):
        classify_order3(parse_operator("T^4"))


@pytest.mark.parametrize("a,al,be", [(4, F(1, 2), F(1)), (F(-7, 3), F(1, 3), F(2, 5)), (1, F(0), F(0))])
def test_transverse_t_order_three(a, al, be):
    a, s, p = F(a), al + be, al * be
    h = a / 4
    op = ThetaOperator([Poly.monomial(3), Poly([p, s + 2 * p, 3 * s, 4]) * h,
                        Poly([p, s, 1]) * Poly([s / 2, 1]) * (a * a / 4)])
    assert cy_quantity_W(op).is_zero()
    assert classify_order3(op) == Order3Label.TransverseT
    if s == 0:
        return  # every P_i is a multiple of T^3; any x^2 scale stays on the variety
    # the x^2 factor (a/4)^2 as displayed leaves the variety
    bad = ThetaOperator([op.P(0), op.P(1), op.P(2) * F(1, 4)])
    assert classify_order3(bad) == Order3Label.Off
