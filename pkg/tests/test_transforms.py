import random
from fractions import Fraction as F

import pytest

from cyop.errors import BadArity, BadNormalization, DegenerateParams, NoFit, UnknownName, UnknownPair
from cyop.exact.series import PowerSeries
from cyop.frobenius import holomorphic_solution
from cyop.operator.cy import satisfies_cy
from cyop.operator.riemann import INFINITY, riemann_symbol
from cyop.operator.theta import parse_operator
from cyop.catalog.entries import get_entry
from cyop.transforms.fit import fit_operator
from cyop.transforms.identities import (main_family_build, misc_solution, p1_hypergeometric_check,
                                        shift_equivalence_check, sigma_shift_check, small_family,
                                        solution_identity_check, twist_check, twist_pairs, wronskian5_check)
from cyop.transforms.registry import build_named, registry_keys, tilde_operator
from cyop.transforms.series_ops import hadamard, moebius_pullback


def head(key, n):
    return list(holomorphic_solution(build_named(key).op, n).coeffs)


def test_hadamard_heads():
    I = PowerSeries([1, 2, 6, 20])
    assert list(hadamard(I, I).coeffs) == [1, 4, 36, 400] == head("A", 3)
    A = holomorphic_solution(build_named("A").op, 6)
    b = holomorphic_solution(build_named("bzb:b").op, 6)
    assert hadamard(A, b) == holomorphic_solution(get_entry("2.5").operator(), 6)
    assert hadamard(A, b)[2] == 36 * 19


def test_moebius():
    A = holomorphic_solution(build_named("A").op, 2)
    assert list(moebius_pullback(A, 16).coeffs) == [1, 12, 164]
    D = holomorphic_solution(build_named("D").op, 2)
    assert list(moebius_pullback(D, 432).coeffs) == [1, 372, 148644]
    one = PowerSeries.one(4)
    assert list(moebius_pullback(one, 3).coeffs) == [1, 3, 9, 27, 81]


def test_registry():
    d = build_named("D")
    assert d.op == parse_operator("T^2 - 432*x*(T+1/6)*(T+5/6)")
    assert head("D", 3) == [1, 60, 13860, 4084080]
    assert head("bzb:b", 3) == [1, 3, 19, 147]
    assert "tilde:1" in registry_keys()
    with pytest.raises(UnknownName):
        build_named("nope")


def test_tilde_infinity():
    rs = riemann_symbol(build_named("tilde:1").op)
    assert rs.at(INFINITY).exponents == (F(4, 5), F(9, 10), F(11, 10), F(6, 5))
    assert riemann_symbol(tilde_operator(7, 0, 0)).at(INFINITY).exponents == (1, 1, 1, 1)


def test_fit():
    I = holomorphic_solution(build_named("I").op, 12)
    assert fit_operator(I, 1, 1).op == parse_operator("T - x*(4T+2)")
    q = parse_operator("T^4 - 3125*x*(T+1/5)*(T+2/5)*(T+3/5)*(T+4/5)")
    assert fit_operator(holomorphic_solution(q, 15), 4, 1).op == q
    rng = random.Random(3)
    noise = PowerSeries([1] + [rng.randint(-50, 50) for _ in range(9)])
    with pytest.raises(NoFit):
        fit_operator(noise, 1, 0)


def test_twist():
    for pair in twist_pairs():
        assert twist_check(pair)
    assert twist_check(("b", "eta")) and twist_check(("a", "delta"))
    assert not twist_check(("b", "delta"))
    with pytest.raises(UnknownPair):
        twist_check(("zz", "eta"))


def test_small_families():
    assert satisfies_cy(small_family("P2", (4, 2, 0, 1)))
    with pytest.raises(DegenerateParams):
        small_family("P0", (1, 0, 0, 1))
    with pytest.raises(BadArity):
        small_family("P0", (1, 2))
    rng = random.Random(11)
    for which in ("P0", "P1", "P2", "P3", "P4"):
        for _ in range(3):
            while True:
                args = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(5 if which in ("P1", "P3") else 4)]
                try:
                    op = small_family(which, args)
                    break
                except DegenerateParams:
                    continue
            assert satisfies_cy(op)


def test_shift_equivalence():
    assert shift_equivalence_check(4, 2, 1, 1)
    assert shift_equivalence_check(3, 0, 2, F(1, 2))
    rng = random.Random(5)
    for _ in range(10):
        a, d, e, A = (F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(4))
        assert shift_equivalence_check(a, d, e, A)


def test_sigma_shift_and_p1_identity():
    rng = random.Random(8)
    done = 0
    while done < 5:
        a, d, e, al, be = (F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(5))
        try:
            assert sigma_shift_check(a, d, e, al, be)
        except DegenerateParams:
            continue
        done += 1
    assert p1_hypergeometric_check(2, -3125, F(1, 5), F(2, 5))


def test_misc_third_order():
    assert list(misc_solution(1, 0, 6).coeffs) == [1] + [0] * 6
    assert solution_identity_check(3, 1)
    assert solution_identity_check(F(1, 2), F(1, 3))
    s = misc_solution(F(1, 2), F(1, 3), 8)
    primes = set()
    for c in s.coeffs:
        n = c.denominator
        p = 2
        while n > 1:
            while n % p == 0:
                primes.add(p)
                n //= p
            p += 1
    assert primes <= {2, 3}


def test_wronskian5():
    assert wronskian5_check(3)
    assert wronskian5_check(1)
    assert not wronskian5_check(1, N=5**5 + 1)


def test_main_family_build():
    assert main_family_build([1], [0], [0]) == parse_operator("T^4")
    op = main_family_build([1, 2], [0, 3], [0, 5])
    assert op.degree == 1 and satisfies_cy(op)
    op = main_family_build([1, 1, 1], [0, 1, -1], [0, 1])
    assert op.degree == 2 and satisfies_cy(op)
    finite = [p for p in riemann_symbol(op).points if p not in (0, INFINITY)]
    assert len(finite) == 2  # roots of 1 + x + x^2; with 0 and infinity four singular points
    with pytest.raises(BadNormalization):
        main_family_build([2], [0], [0])
