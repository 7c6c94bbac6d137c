"""End-to-end smoke tests for the Python bindings.

The manifests here repeat the fixtures used by the C++ suite; the point is
only that the bindings expose the same operations with the same canonical
output, not to re-test the mathematics.
"""

import pytest

import taugen

SQUARE_GRAPH = """taugen-pair 1
field: Q
n: 1
primality: constructed:graph
[V]
[W]
u1 - x1^2
[point]
x1 = 1
"""

CIRCLE = """taugen-pair 1
field: Q
n: 2
primality: constructed:bundle
[V]
x1^2 + x2^2 - 1
[W]
x1^2 + x2^2 - 1
x1*u1 + x2*u2
[point]
x1 = 0
x2 = 1
"""

CIRCLE_HYPERBOLA = """taugen-ideal 1
field: Q
n: 2
vars: x
[generators]
x1^2 + x2^2 - 1
x1*x2 - 1
"""

SECOND_ORDER = """taugen-system 1
field: Q
n: 1
[equations]
x1'' = x1'
"""


def test_check_pair_accepts_graph():
    res = taugen.check_pair(SQUARE_GRAPH)
    assert res["accepted"] is True
    assert res["m"] == 0
    assert res["fiber_forms"][0]["constant"] == "x1^2"


def test_check_pair_certificate_circle():
    res = taugen.check_pair(CIRCLE)
    assert res["accepted"] is True
    assert res["m"] == 1
    assert list(res["basis"]) == [1]


def test_member_and_decide():
    assert taugen.member(SQUARE_GRAPH, "x1' - x1^2") is True
    assert taugen.member(SQUARE_GRAPH, "x1' - x1") is False
    assert taugen.decide(SQUARE_GRAPH, "(x1'' - 2*x1^3 = 0) & !(x1 = 0)") is True


def test_series_check_refutes():
    out = taugen.series_check(SQUARE_GRAPH, "x1' - x1")
    assert out["refuted"] is True
    assert out["order"] == 1
    assert out["witness"] == "1"
    assert taugen.series_check(SQUARE_GRAPH, "x1' - x1^2")["refuted"] is False


def test_groebner_frozen_basis():
    assert taugen.groebner(CIRCLE_HYPERBOLA) == [
        "x1*x2 - 1",
        "x2^2 + x1^2 - 1",
        "x2 + x1^3 - x1",
    ]
    assert taugen.groebner(CIRCLE_HYPERBOLA, order="lex") == [
        "x1^4 - x1^2 + 1",
        "x2 + x1^3 - x1",
    ]


def test_normal_form():
    assert taugen.normal_form(CIRCLE_HYPERBOLA, "x1^2 + x2^2") == "1"


def test_prolongation_roundtrip():
    out = taugen.prolongation(CIRCLE_HYPERBOLA)
    assert out.startswith("taugen-ideal 1")
    assert "u2 + 3*x1^2*u1 - u1" in out


def test_stabilize_second_order():
    res = taugen.stabilize(SECOND_ORDER)
    assert res["r"] == 2
    assert list(res["d"]) == [1, 1, 0, 0]
    assert res["stacked_n"] == 3
    assert "x3 - x2" in res["manifest"]
    assert "recipe: stabilize(x1''=x1')" in res["manifest"]


def test_enumerate_first_pairs():
    events = taugen.enumerate_pairs(n=1, count=5)
    recipes = [e["recipe"] for e in events if e["kind"] == "pair"]
    assert recipes == [
        "r1;V=affine;W=graph(0)",
        "r1;V=affine;W=graph(1)",
        "r1;V=affine;W=graph(-1)",
        "r1;V=affine;W=graph(x1)",
        "r1;V=hyp(x1);W=graph(0)",
    ]


def test_formula_stream_and_membership():
    assert taugen.formula_at(1, 1) == "x1 = 0"
    assert taugen.formula_at(1, 4) == "0 = 0"
    # x1 = 0 holds at the generic point of V(x1) (pair 5) but not on the
    # affine line (pair 1); 0 = 0 holds everywhere
    assert taugen.listing_membership(5, 1) is True
    assert taugen.listing_membership(1, 1) is False
    assert taugen.listing_membership(1, 4) is True


def test_canonical_printing():
    assert taugen.canonical(" x1'' -  2*x1^3 ") == "x1'' - 2*x1^3"
    with pytest.raises(ValueError):
        taugen.canonical("x1 +")


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        taugen.check_pair("not a manifest")
