from fractions import Fraction
from pathlib import Path

import pytest

import platy

GOLDEN = Path(__file__).resolve().parents[1] / "golden"


def test_reduce_example():
    r = platy.reduce_gram([[2, 1, 1], [1, 3, 1], [1, 1, 4]])
    assert r["determinant"] == 17
    assert sorted(r["reduced"]) == [0, 0, 0, 1, 1, 2, 3]
    assert sorted(r["vonorms"]) == [2, 3, 3, 4, 4, 5, 7]


def test_reduce_2d_chain():
    # a superbase with conorms -3, 5, 10
    r = platy.reduce_gram([[15, -10], [-10, 7]])
    assert sorted(r["trace"][0]) == [-3, 5, 10]
    assert sorted(r["reduced"]) == [1, 1, 2]
    assert r["determinant"] == 5


def test_classify_cubic():
    c = platy.classify([1, 1, 1, 0, 0, 0, 0])
    assert c["bravo_letter"] == "X"
    assert c["bravais_name"] == "primitive Cubic"


def test_invariants_fractions():
    inv = platy.invariants("c4", {"D": 5, "A": "1/2"})
    assert inv["systole_sq"] == Fraction(1, 2)
    assert inv["diameter_kind"] == "exact"
    assert inv["injectivity_radius_sq"] == inv["systole_sq"] / 4


def test_covers_c6():
    cs = platy.covers("c6", {"D": 1, "A": 1})
    assert [c["name"] for c in cs] == ["c3^{4}_{1 1 1}"]
    assert all(c["agrees"] for c in cs)


def test_recognize_round_trip():
    g = platy.generators("-a2", {"D": 3, "A": 2, "B": 7})
    r = platy.recognize(g)
    assert r["name"].startswith("-a2")
    assert r["descriptor"]["params"] == {"D": 3, "A": 2, "B": 7}


def test_sinistral_round_trip():
    g = platy.generators("c3", {"D": 2, "A": 1}, "sinistral")
    assert platy.recognize(g)["descriptor"]["chirality"] == "sinistral"


def test_domain_error():
    with pytest.raises(platy.DomainError):
        platy.invariants("c3", {"D": 0, "A": 1})


def test_tables_match_golden():
    for n in (1, 3, 4, 11, 12, 13):
        assert platy.table(n) == (GOLDEN / f"table{n}.txt").read_text(encoding="utf-8")


def test_oracle_agrees_with_systole():
    o = platy.oracle("c2", {"D": 1, "A": 1, "B": 1, "C": 0}, grid=4)
    inv = platy.invariants("c2", {"D": 1, "A": 1, "B": 1, "C": 0})
    assert o["systole_sq"] == inv["systole_sq"]
    assert o["diameter_lower"] <= inv["diameter_sq"] <= o["diameter_upper"]
