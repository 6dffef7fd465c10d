from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanocone.cones import nef_basis
from fanocone.lattice import (
    E,
    F,
    H,
    L,
    CurveClass,
    DeltaCoeffs,
    DivClass,
    Geometry,
    InvalidGeometry,
    LINE_L,
    FIBRE_E,
    anticanonical,
    delta_class,
    delta_to_greek,
    named_curves,
    named_divisors,
    pair,
)

rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)
divs = st.builds(DivClass, rats, rats, rats, rats)
curves = st.builds(CurveClass, rats, rats, rats, rats)
deltas = st.builds(DeltaCoeffs, rats, rats, rats, rats, rats)
geoms = st.integers(3, 12).flatmap(
    lambda n: st.builds(Geometry, st.just(n), st.integers(2, n - 1), st.integers(1, 8))
)


def test_pair_basics():
    assert pair(H, LINE_L) == 1
    assert pair(E, FIBRE_E) == -1
    assert pair(DivClass.zero(), CurveClass(3, -1, 2, 5)) == 0


def test_named_curves():
    g = Geometry(4, 2, 2)
    c = named_curves(g)
    assert c.h0.coords() == (0, 1, -2, 0)
    assert c.e0.coords() == (0, 0, 1, -1)
    g1 = Geometry(4, 2, 1)
    c1 = named_curves(g1)
    assert c1.h0 == c1.l0 + CurveClass(-1, 1, 0, 0)


def test_named_divisors():
    H0, L0, D = named_divisors(Geometry(5, 3, 3))
    assert H0.coords() == (1, 0, -1, 0)
    assert L0.coords() == (0, 1, 0, -1)
    assert D.coords() == (0, 3, -1, -1)
    c = named_curves(Geometry(5, 3, 3))
    assert pair(H0, c.l0) == 0
    assert pair(H0, c.f) == 0
    H0, L0, D = named_divisors(Geometry(4, 2, 1))
    assert L0 == D + E


@pytest.mark.parametrize(
    "nkd, expected",
    [((4, 2, 1), (3, 3, -2, -1)), ((5, 3, 2), (3, 4, -2, -2)), ((3, 2, 1), (2, 3, -1, -1))],
)
def test_anticanonical(nkd, expected):
    assert anticanonical(Geometry(*nkd)).coords() == expected


def test_delta_class_examples():
    g1, g2 = Geometry(4, 2, 1), Geometry(4, 2, 2)
    assert delta_class(DeltaCoeffs(0, 0, 0, 0, 0), g1) == DivClass.zero()
    assert delta_class(DeltaCoeffs(0, Fraction(1, 2), Fraction(3, 4), 0, 0), g1).coords() == (
        0, Fraction(1, 2), Fraction(3, 4), Fraction(-1, 2))
    assert delta_class(DeltaCoeffs(0, 0, 0, 0, 1), g2) == named_divisors(g2).D


def test_delta_to_greek_examples():
    half = Fraction(1, 2)
    for d in (1, 2, 7):
        assert delta_to_greek(DeltaCoeffs(half, 0, 0, 0, 0), Geometry(5, 2, d)) == (half, 0, -half, 0)
    assert delta_to_greek(DeltaCoeffs(0, 0, 0, 0, 0), Geometry(3, 2, 1)) == (0, 0, 0, 0)
    assert delta_to_greek(DeltaCoeffs(Fraction(1, 8), half, Fraction(3, 4), 0, 0), Geometry(4, 3, 2)) == (
        Fraction(1, 8), half, Fraction(5, 8), -half)


@pytest.mark.parametrize("nkd", [(2, 2, 1), (4, 1, 1), (4, 4, 1), (5, 3, 0), (3, 2, -1)])
def test_geometry_rejects(nkd):
    with pytest.raises(InvalidGeometry):
        Geometry(*nkd)


def test_geometry_rejects_non_integers():
    with pytest.raises(InvalidGeometry):
        Geometry(4.0, 2, 1)


def test_lemma_table_sweep():
    for n in range(3, 13):
        for k in range(2, n):
            for d in range(1, 7):
                g = Geometry(n, k, d)
                table = [[pair(N, c) for c in named_curves(g)] for N in nef_basis(g)]
                assert table == [[int(i == j) for j in range(4)] for i in range(4)], g


@settings(max_examples=500)
@given(rats, rats, divs, divs, curves)
def test_pairing_bilinear(a, b, D1, D2, c):
    assert pair(a * D1 + b * D2, c) == a * pair(D1, c) + b * pair(D2, c)


@settings(max_examples=200)
@given(deltas, geoms)
def test_delta_class_matches_vector_sum(c, g):
    H0, L0, D = named_divisors(g)
    vector = c.x * H0 + c.y * L0 + c.z * E + c.w * F + c.u * D
    assert delta_class(c, g) == vector
    assert delta_to_greek(c, g) == vector.coords()


def test_vector_ops():
    assert H + L - E == DivClass(1, 1, -1, 0)
    assert -F == DivClass(0, 0, 0, -1)
    assert Fraction(1, 2) * H == H * Fraction(1, 2) == DivClass(Fraction(1, 2), 0, 0, 0)
    with pytest.raises(TypeError):
        H * 0.5
