"""Closed-form positivity of -(K + boundary) and of -K itself."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .cones import is_ample, is_big, is_nef, nef_coords
from .exact_core import InfeasibleWitnessError
from .lattice import E, F, DivClass, Geometry, anticanonical, named_divisors

Greek = Sequence[Fraction]


class MinusKStatus(enum.Enum):
    AMPLE = "ample"
    NEF_NOT_AMPLE = "nef_not_ample"
    NOT_NEF = "not_nef"


class CriterionRow(NamedTuple):
    label: str
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class PositivityReport:
    ample: bool
    nef: bool
    big: bool
    nef_coords: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        if self.ample and not (self.nef and self.big):
            raise ValueError("ample class must be nef and big")


def criterion_rows(greek: Greek, g: Geometry) -> list[CriterionRow]:
    """The four rows ``lhs < rhs`` whose conjunction is ampleness of -(K + boundary)."""
    a, b, c, dl = (Fraction(v) for v in greek)
    n, k, d = g.n, g.k, g.d
    return [
        CriterionRow("alpha + gamma", a + c, Fraction(1)),
        CriterionRow("beta + d*gamma", b + d * c, Fraction(k + 1 - (n - k) * d)),
        CriterionRow("-gamma + delta", -c + dl, Fraction(n - 2 * k + 1)),
        CriterionRow("-delta", -dl, Fraction(k - 1)),
    ]


def ample_criterion(greek: Greek, g: Geometry) -> bool:
    return all(r.lhs < r.rhs for r in criterion_rows(greek, g))


def nef_criterion(greek: Greek, g: Geometry) -> bool:
    return all(r.lhs <= r.rhs for r in criterion_rows(greek, g))


def minus_K_status(g: Geometry) -> MinusKStatus:
    slack = (g.k + 1 - (g.n - g.k) * g.d, g.n - 2 * g.k + 1)
    if all(s > 0 for s in slack):
        return MinusKStatus.AMPLE
    if all(s >= 0 for s in slack):
        return MinusKStatus.NEF_NOT_AMPLE
    return MinusKStatus.NOT_NEF


def big_decomposition(g: Geometry) -> tuple[DivClass, DivClass]:
    """-K = A + B with A ample and B effective; both facts are re-checked here."""
    n, k = g.n, g.k
    d = Fraction(g.d)
    A = DivClass(Fraction(1, 2) + 1 / d, 1 + 1 / (2 * d), -1 / d, -1 / (2 * d))
    B = DivClass(n - k + Fraction(1, 2) - 1 / d, k - 1 / (2 * d), -(n - k - 1 / d), -(k - 1 - 1 / (2 * d)))
    if A + B != anticanonical(g):
        raise InfeasibleWitnessError(f"A + B != -K at {g}")
    if not is_ample(A, g):
        raise InfeasibleWitnessError(f"A not ample at {g}")
    cert = b_certificate(g)
    if any(c < 0 for c in cert) or _from_eff(cert, g) != B:
        raise InfeasibleWitnessError(f"B certificate fails at {g}")
    return A, B


def b_certificate(g: Geometry) -> tuple[Fraction, ...]:
    """Coefficients of B on (H0, L0, E, F, D)."""
    d = Fraction(g.d)
    return (g.n - g.k + Fraction(1, 2) - 1 / d, g.k - 1 / (2 * d), Fraction(1, 2), Fraction(1), Fraction(0))


def _from_eff(coeffs: Sequence[Fraction], g: Geometry) -> DivClass:
    H0, L0, D = named_divisors(g)
    out = DivClass.zero()
    for a, gen in zip(coeffs, (H0, L0, E, F, D)):
        out = out + a * gen
    return out


def minus_K_big(g: Geometry) -> bool:
    big_decomposition(g)
    return True


def report(D: DivClass, g: Geometry) -> PositivityReport:
    return PositivityReport(ample=is_ample(D, g), nef=is_nef(D, g), big=is_big(D, g), nef_coords=nef_coords(D, g))


def boundary_report(greek: Greek, g: Geometry) -> PositivityReport:
    """Positivity of -(K + boundary) for a boundary with (H, L, E, F) coordinates ``greek``."""
    return report(anticanonical(g) - DivClass(*greek), g)


__all__ = [
    "CriterionRow",
    "MinusKStatus",
    "PositivityReport",
    "ample_criterion",
    "b_certificate",
    "big_decomposition",
    "boundary_report",
    "criterion_rows",
    "minus_K_big",
    "minus_K_status",
    "nef_criterion",
    "report",
]
