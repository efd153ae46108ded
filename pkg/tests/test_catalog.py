from fractions import Fraction as F

import pytest

from cyop.catalog.entries import load_catalog, get_entry, parse_catalog, parse_factored, parse_record
from cyop.catalog.verify import export_report, fingerprint_lookup, source_check, summarize, verify_all, verify_entry
from cyop.errors import CatalogParseError, InvariantViolation


def test_row_2_1():
    e = get_entry("2.1")
    p = e.params
    assert (p.a, p.b, p.c, p.d, p.e, p.f) == (112, 224, 172, 60, 8, -2048)
    assert p.exponents == (F(1, 2), F(1, 2), F(3, 2), F(3, 2))


def test_row_2_39():
    p = get_entry("2.39").params
    assert p.f == 2**4 * 5**10
    assert sorted(p.exponents) == [F(4, 5), F(9, 10), F(11, 10), F(6, 5)]


def test_parse_factored():
    assert parse_factored("-(2)^11") == -2048
    assert parse_factored("(2)^4(3)") == 48
    assert parse_factored("(3^6)") == 729
    assert parse_factored("17") == 17


def test_empty_and_bad():
    assert parse_catalog("") == []
    assert parse_catalog("# only a comment\n") == []
    with pytest.raises(CatalogParseError):
        parse_record("id=9 a=1 b=2")
    with pytest.raises(InvariantViolation):
        parse_record("id=9 a=1 b=5 c=3 d=1 e=0 f=1 exps=1,1,1,1")
    line = "id=x a=112 b=224 c=172 d=60 e=8 f=-(2)^11 exps=1/2,1/2,3/2,3/2 n=12,163,3204"
    with pytest.raises(CatalogParseError):
        parse_catalog(line + "\n" + line)


def test_counts():
    entries = load_catalog()
    numbered = [e for e in entries if e.id.replace(".", "").isdigit()]
    assert len(numbered) == 70
    assert sum(e.status == "proper" for e in entries) == 69


def test_invariants_hold():
    for e in load_catalog():
        p = e.params
        assert p.b == 2 * (p.c - p.d)
        assert p.sigma_delta() is not None
        if e.num_singular == 3:
            assert p.a * p.a == 4 * p.f
        elif e.num_singular == 4:
            assert p.a * p.a != 4 * p.f


def test_sources():
    for e in load_catalog():
        assert source_check(e) in (True, None), e.id


def test_verify_single_rows():
    o = verify_entry(get_entry("2.1"))
    assert o.computed_n == (12, 163, 3204) and o.match == "exact" and set(o.classification) == {"Main"}
    o = verify_entry(get_entry("2.66"))
    assert o.computed_n == (-192, 4182, -229568) and o.match == "exact"
    assert any("compositional square of D" in n for n in o.notes)
    o = verify_entry(get_entry("2.54"))
    assert o.match == "exact" and any("2.53" in n for n in o.notes)
    o = verify_entry(get_entry("2.49"))
    assert o.match == "flagged" and o.computed_n[0] == -26400


def test_fingerprints():
    assert fingerprint_lookup(12, 3204) == ["2.1"]
    assert fingerprint_lookup(160, 539680) == ["2.33", "2.xx41"]
    assert fingerprint_lookup(1, 1) == []


def test_report_shapes():
    one = verify_all([get_entry("2.1")])
    text = export_report(one, timing=False)
    assert len(text.strip().splitlines()) == 2
    assert len(export_report([], timing=False).strip().splitlines()) == 1
    csv = export_report(one, "csv", timing=False)
    assert csv.splitlines()[1].startswith("2.1;proper;12,163,3204;12,163,3204;exact")
    assert summarize(one).exact == ["2.1"]
