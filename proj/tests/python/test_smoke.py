from fractions import Fraction

import pytest

import orderone


def test_relations_table():
    classes = orderone.enumerate_relations(8)
    assert len(classes) == 10
    assert classes[0]["type"] == "R2"
    assert orderone.check_relations(8)["ok"]


def test_lift_mod2_roundtrip():
    rel = {"entries": [{"root": "0/1", "sign": 1}, {"root": "1/3", "sign": 1}, {"root": "2/3", "sign": -1}]}
    lift = orderone.lift_mod2(rel)
    assert lift is not None
    assert [e["root"] for e in lift["entries"]] == ["0/1", "1/3", "2/3"]
    assert all(e["sign"] == 1 for e in lift["entries"])


def test_madan_pal_record():
    rec = orderone.build_record(8)
    assert rec["p_n"] == [1, -8, 16, -8, 1]
    assert sum(rec["weil"]) == 1  # order one
    assert rec["newton_polygon"] == [(Fraction(1, 4), 4), (Fraction(3, 4), 4)]
    assert not rec["ordinary"]


def test_weil_operations():
    assert orderone.newton_polygon([2, -2, 1], 2) == [(Fraction(1, 2), 2)]
    assert not orderone.is_ordinary([2, -2, 1], 2)
    assert orderone.base_extension([2, -2, 1], 2) == [4, 0, 1]
    assert orderone.honda_tate_exponent([-2, 0, 1], 2) == 2
    assert orderone.padic_factor_degrees([7, 0, 1], 2) == [(0, 1), (0, 1)]


def test_big_coefficients():
    big = 10**40 + 7
    assert orderone.base_extension([-big, 1], 3) == [-(big**3), 1]


def test_solver_and_table():
    sols = orderone.solve_g(6, 6, 12, workers=1)
    assert ("1/2", "1/2", "0/1") in sols
    rep = orderone.verify_table2(workers=1)
    assert rep["checks"]["sporadic"]["ok"]
    assert rep["checks"]["parametric"]["ok"]


def test_geometry():
    assert orderone.f_from_formula(7) == 3
    reports = orderone.decompose(7)
    assert all(r["f_oracle"] == r["f_formula"] == 3 for r in reports)
    assert orderone.geom_isogenous(6, 7)
    assert not orderone.geom_isogenous(3, 5)
    assert frozenset({3, 30}) in orderone.geometric_isogeny_pairs(30, workers=1)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        orderone.newton_polygon([2, -2, 1], 6)
    with pytest.raises(RuntimeError):
        orderone.enumerate_relations(9)
