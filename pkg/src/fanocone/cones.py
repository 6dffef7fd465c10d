"""Nef and effective cones of the double blow-up.

The nef generators and the curves (l0, h0, e0, f) are dual bases, so nef
coordinates are plain intersection numbers.  The effective cone has five
generators in rank 4; membership and interiority go through exact FM.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

from .exact_core import LE, LT, InfeasibleWitnessError, LinIneq, LinIneqSystem, feasible, find_witness
from .lattice import E, F, DivClass, Geometry, H, L, named_curves, named_divisors, pair


class NefBasis(NamedTuple):
    N1: DivClass
    N2: DivClass
    N3: DivClass
    N4: DivClass


EFF_NAMES = ("H0", "L0", "E", "F", "D")


def nef_basis(g: Geometry) -> NefBasis:
    N3 = H + g.d * L - E
    return NefBasis(H, L, N3, N3 - F)


def eff_gens(g: Geometry) -> list[DivClass]:
    """[H0, L0, E, F, D] as divisor classes."""
    H0, L0, D = named_divisors(g)
    return [H0, L0, E, F, D]


def nef_coords(D: DivClass, g: Geometry) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    return tuple(pair(D, c) for c in named_curves(g))


def is_nef(D: DivClass, g: Geometry) -> bool:
    return all(c >= 0 for c in nef_coords(D, g))


def is_ample(D: DivClass, g: Geometry) -> bool:
    return all(c > 0 for c in nef_coords(D, g))


def _combination_rows(D: DivClass, gens: list[DivClass], names: list[str], shift: Optional[str] = None):
    # sum_i (a_i [+ shift]) * gens[i] == D, written as two <= rows per coordinate.
    rows = []
    for j in range(4):
        coeffs: dict[str, Fraction] = {}
        for name, gen in zip(names, gens):
            coeffs[name] = coeffs.get(name, 0) + gen.coords()[j]
        if shift is not None:
            coeffs[shift] = sum(gen.coords()[j] for gen in gens)
        target = D.coords()[j]
        rows.append(LinIneq.of(coeffs, -target, LE))
        rows.append(LinIneq.of({v: -c for v, c in coeffs.items()}, target, LE))
    rows.extend(LinIneq.of({name: -1}, 0, LE) for name in names)
    return rows


def effective_membership(D: DivClass, g: Geometry) -> Optional[tuple[Fraction, ...]]:
    """Nonnegative (a1..a5) with D = a1*H0 + a2*L0 + a3*E + a4*F + a5*D, or None.

    Certificates are not unique (five generators, rank 4); whichever one FM
    back-substitution produces is returned.
    """
    gens = eff_gens(g)
    names = [f"a{i}" for i in range(1, 6)]
    system = LinIneqSystem(tuple(names), _combination_rows(D, gens, names))
    witness = find_witness(system)
    if witness is None:
        return None
    coeffs = tuple(witness[name] for name in names)
    rebuilt = DivClass.zero()
    for a, gen in zip(coeffs, gens):
        rebuilt = rebuilt + a * gen
    if rebuilt != D or any(a < 0 for a in coeffs):
        raise InfeasibleWitnessError(f"bad effective certificate {coeffs} for {D}")
    return coeffs


def is_big(D: DivClass, g: Geometry) -> bool:
    """Whether D lies in the interior of the effective cone.

    Decided as: D - eps * sum(gens) is effective for some eps > 0.
    """
    gens = eff_gens(g)
    names = [f"a{i}" for i in range(1, 6)]
    rows = _combination_rows(D, gens, names, shift="eps")
    rows.append(LinIneq.of({"eps": -1}, 0, LT))
    return feasible(LinIneqSystem(tuple(names) + ("eps",), rows))
