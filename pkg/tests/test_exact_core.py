import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanocone.exact_core import (
    LE,
    LT,
    LinIneq,
    LinIneqSystem,
    eliminate,
    feasible,
    find_witness,
    format_rat,
    parse_rat,
    rat,
)
from fanocone.lattice import Geometry
from fanocone.logfano import logfano_system

from oracles import grid_search, random_system

rats = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def row(coeffs, const=0, rel=LT):
    return LinIneq.of(coeffs, const, rel)


def as_set(system):
    return {(r.coeffs, r.constant, r.relation) for r in system.rows}


def test_eliminate_open_interval():
    s = LinIneqSystem(("x",), [row({"x": 1}, -1), row({"x": -1})])
    out = eliminate(s, "x")
    assert out.vars == ()
    assert as_set(out) == as_set(LinIneqSystem((), [row({}, -1)]))
    assert feasible(out)


def test_eliminate_empty_interval():
    s = LinIneqSystem(("x",), [row({"x": 1}), row({"x": -1})])
    out = eliminate(s, "x")
    assert as_set(out) == {((), Fraction(0), LT)}
    assert not feasible(out)


def test_eliminate_projects_triangle():
    # 0 < x < y <= 1 projects onto 0 < x < 1
    s = LinIneqSystem(("x", "y"), [row({"x": 1, "y": -1}), row({"y": 1}, -1, LE), row({"x": -1})])
    out = eliminate(s, "y")
    assert out.vars == ("x",)
    assert as_set(out) == as_set(LinIneqSystem(("x",), [row({"x": 1}, -1), row({"x": -1})]))


def test_eliminate_unknown_variable():
    with pytest.raises(KeyError):
        eliminate(LinIneqSystem(("x",), []), "y")


def test_system_rejects_undeclared_variable():
    with pytest.raises(ValueError):
        LinIneqSystem(("x",), [row({"y": 1})])


@pytest.mark.parametrize(
    "system, expected",
    [
        (LinIneqSystem((), []), True),
        (LinIneqSystem(("x",), [row({"x": 1}), row({"x": -1}, 0, LE)]), False),
        (LinIneqSystem(("x",), [row({"x": 1}, 0, LE), row({"x": -1}, 0, LE)]), True),
    ],
)
def test_feasible_small(system, expected):
    assert feasible(system) is expected


def test_feasible_logfano_631():
    assert feasible(logfano_system(Geometry(6, 3, 1)))


def test_witness_midpoint():
    w = find_witness(LinIneqSystem(("x",), [row({"x": -1}), row({"x": 1}, -1)]))
    assert w.assignment == {"x": Fraction(1, 2)}


def test_witness_half_bounded_and_free():
    w = find_witness(LinIneqSystem(("x", "y"), [row({"x": -1}, 3)]))
    assert w["x"] == 4
    assert w["y"] == 0
    w = find_witness(LinIneqSystem(("x",), [row({"x": 1}, 3, LE)]))
    assert w["x"] == -4


def test_witness_degenerate_closed_interval():
    w = find_witness(LinIneqSystem(("x",), [row({"x": 1}, -2, LE), row({"x": -1}, 2, LE)]))
    assert w["x"] == 2


def test_witness_absent():
    assert find_witness(LinIneqSystem(("x",), [row({"x": 1}), row({"x": -1})])) is None


def test_witness_logfano_422():
    s = logfano_system(Geometry(4, 2, 2))
    assert s.satisfied_by({"x": Fraction(3, 4), "y": 0, "z": 0, "w": 0, "u": 0})
    w = find_witness(s)
    assert w is not None and s.satisfied_by(w.assignment)


def test_only_nonstrict_stays_nonstrict():
    rng = random.Random(7)
    for _ in range(100):
        s = random_system(rng)
        s = LinIneqSystem(s.vars, [LinIneq(r.coeffs, r.constant, LE) for r in s.rows])
        out = eliminate(s, s.vars[0])
        assert all(r.relation == LE for r in out.rows)


def test_strict_parent_gives_strict_child():
    # x + y < 1 and x - y <= 0 both combine with -x <= 0
    s = LinIneqSystem(("x", "y"), [row({"x": 1, "y": 1}, -1, LT), row({"x": 1, "y": -1}, 0, LE), row({"x": -1}, 0, LE)])
    out = {r.coeffs: r.relation for r in eliminate(s, "x").rows}
    assert out == {(("y", Fraction(1)),): LT, (("y", Fraction(-1)),): LE}


def test_fm_matches_grid_oracle():
    rng = random.Random(20240611)
    decided = 0
    for _ in range(250):
        s = random_system(rng)
        w = find_witness(s)
        point = grid_search(s)
        assert feasible(s) == (w is not None)
        if w is not None:
            assert s.satisfied_by(w.assignment)
        if point is not None:
            decided += 1
            assert w is not None, f"grid found {point} but FM says infeasible: {s}"
        if w is None:
            assert point is None
    assert decided >= 50


@pytest.mark.parametrize("text, value", [("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), ("6/8", Fraction(3, 4)), ("-1/2", Fraction(-1, 2))])
def test_parse_rat(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("bad", ["1.5", "a/b", "1/0", "", "1/-2"])
def test_parse_rat_rejects(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_rat_refuses_float():
    with pytest.raises(TypeError):
        rat(0.5)


@given(rats)
def test_format_roundtrip(q):
    text = format_rat(q)
    assert parse_rat(text) == q
    assert ("/" in text) == (q.denominator != 1)


@settings(max_examples=300)
@given(rats, rats, rats)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a != 0:
        assert a * (1 / a) == 1
        assert a.denominator > 0
