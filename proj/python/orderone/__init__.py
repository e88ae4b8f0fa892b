"""Order-one abelian varieties over F_2.

Thin wrappers around the C++ core. Polynomials are lists of Python ints in
ascending degree; roots of unity are strings "k/n"; relations are dicts
{"entries": [{"root": "k/n", "sign": 1}, ...]}.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import _orderone

SCHEMA_VERSION = _orderone.SCHEMA_VERSION

__all__ = [
    "SCHEMA_VERSION",
    "base_extension",
    "build_record",
    "canonicalize",
    "check_relations",
    "decompose",
    "enumerate_relations",
    "f_from_formula",
    "geom_isogenous",
    "geometric_isogeny_pairs",
    "honda_tate_exponent",
    "is_ordinary",
    "lift_mod2",
    "madan_pal_poly",
    "newton_polygon",
    "padic_factor_degrees",
    "solve_g",
    "verify_table2",
]

_POLY_KEYS = {"p_n", "real_weil", "weil", "simple_factor", "simple_factors", "poly"}


def _poly_in(coeffs: list[int]) -> str:
    # Strings keep arbitrary precision on the way in.
    return json.dumps([str(int(c)) for c in coeffs])


def _poly_out(value: list[Any]) -> list[int]:
    return [int(c) for c in value]


def _decode_polys(obj: Any) -> Any:
    if isinstance(obj, dict):
        out = {}
        for key, value in obj.items():
            if key in _POLY_KEYS and isinstance(value, list):
                if value and isinstance(value[0], list):
                    out[key] = [_poly_out(v) for v in value]
                else:
                    out[key] = _poly_out(value)
            else:
                out[key] = _decode_polys(value)
        return out
    if isinstance(obj, list):
        return [_decode_polys(v) for v in obj]
    return obj


def _slopes(segments: list[dict[str, Any]]) -> list[tuple[Fraction, int]]:
    return [(Fraction(s["slope"]), s["multiplicity"]) for s in segments]


def enumerate_relations(max_weight: int) -> list[dict[str, Any]]:
    """Rotation classes of indecomposable relations of weight <= max_weight <= 8."""
    return json.loads(_orderone.enumerate_relations(max_weight))


def check_relations(max_weight: int = 8) -> dict[str, Any]:
    return json.loads(_orderone.check_relations(max_weight))


def canonicalize(relation: dict[str, Any]) -> dict[str, Any]:
    return json.loads(_orderone.canonicalize(json.dumps(relation)))


def lift_mod2(relation: dict[str, Any]) -> dict[str, Any] | None:
    return json.loads(_orderone.lift_mod2(json.dumps(relation)))


def madan_pal_poly(n: int) -> list[int]:
    return _poly_out(json.loads(_orderone.madan_pal_poly(n)))


def build_record(n: int) -> dict[str, Any]:
    rec = _decode_polys(json.loads(_orderone.build_record(n)))
    rec["newton_polygon"] = _slopes(rec["newton_polygon"])
    return rec


def newton_polygon(poly: list[int], q: int = 2) -> list[tuple[Fraction, int]]:
    return _slopes(json.loads(_orderone.newton_polygon(_poly_in(poly), q)))


def is_ordinary(poly: list[int], q: int = 2) -> bool:
    return _orderone.is_ordinary(_poly_in(poly), q)


def base_extension(poly: list[int], n: int) -> list[int]:
    return _poly_out(json.loads(_orderone.base_extension(_poly_in(poly), n)))


def honda_tate_exponent(poly: list[int], q: int = 2) -> int | None:
    return _orderone.honda_tate_exponent(_poly_in(poly), q)


def padic_factor_degrees(poly: list[int], p: int) -> list[tuple[Fraction, int]] | None:
    out = json.loads(_orderone.padic_factor_degrees(_poly_in(poly), p))
    if out is None:
        return None
    return [(Fraction(f["valuation"]), f["degree"]) for f in out]


def solve_g(max_order12: int, max_order3: int, max_level: int, max_phi: int = 0,
            workers: int = 0) -> list[tuple[str, str, str]]:
    sols = json.loads(_orderone.solve_g(max_order12, max_order3, max_level, max_phi, workers))
    return [tuple(t) for t in sols]


def verify_table2(max_order12: int = 32, max_order3: int = 32, max_level: int = 120,
                  workers: int = 0) -> dict[str, Any]:
    return json.loads(_orderone.verify_table2(max_order12, max_order3, max_level, workers))


def f_from_formula(n: int) -> int:
    return _orderone.f_from_formula(n)


def decompose(n: int) -> list[dict[str, Any]]:
    return _decode_polys(json.loads(_orderone.decompose(n)))


def geom_isogenous(n1: int, n2: int) -> bool:
    return _orderone.geom_isogenous(n1, n2)


def geometric_isogeny_pairs(max_n: int, workers: int = 0) -> set[frozenset[int]]:
    return {frozenset(p) for p in json.loads(_orderone.geometric_isogeny_pairs(max_n, workers))}
