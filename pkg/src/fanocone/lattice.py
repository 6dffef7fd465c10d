"""Numerical classes on the double blow-up of P^(n-k) x P^k.

Divisors live in the basis (H, L, E, F): pullbacks of the two hyperplane
classes and the two exceptional divisors.  Curves live in the basis
(l, h, e, f), chosen so that the pairing matrix is diag(1, 1, -1, -1).
Everything else (strict transforms, the anticanonical class, boundary
divisors) is a derived vector in these coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import NamedTuple

from .exact_core import RatLike, rat


class InvalidGeometry(ValueError):
    pass


@dataclass(frozen=True)
class Geometry:
    n: int
    k: int
    d: int

    def __post_init__(self):
        for name in ("n", "k", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidGeometry(f"{name} must be an integer, got {value!r}")
        if self.n < 3:
            raise InvalidGeometry(f"n >= 3 violated (n={self.n})")
        if not 2 <= self.k <= self.n - 1:
            raise InvalidGeometry(f"2 <= k <= n-1 violated (n={self.n}, k={self.k})")
        if self.d < 1:
            raise InvalidGeometry(f"d >= 1 violated (d={self.d})")

    def __str__(self):
        return f"({self.n},{self.k},{self.d})"


class _Vec4:
    """Shared exact arithmetic for the two rank-4 coordinate types."""

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, rat(getattr(self, f.name)))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(*(a + b for a, b in zip(self.coords(), other.coords())))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(*(a - b for a, b in zip(self.coords(), other.coords())))

    def __neg__(self):
        return type(self)(*(-a for a in self.coords()))

    def __mul__(self, scalar: RatLike):
        s = rat(scalar)
        return type(self)(*(s * a for a in self.coords()))

    __rmul__ = __mul__

    @classmethod
    def zero(cls):
        return cls(0, 0, 0, 0)


@dataclass(frozen=True)
class DivClass(_Vec4):
    """Divisor class h*H + l*L + e*E + f*F."""

    h: Fraction
    l: Fraction
    e: Fraction
    f: Fraction

    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.h, self.l, self.e, self.f


@dataclass(frozen=True)
class CurveClass(_Vec4):
    """Curve class cl*l + ch*h + ce*e + cf*f."""

    cl: Fraction
    ch: Fraction
    ce: Fraction
    cf: Fraction

    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.cl, self.ch, self.ce, self.cf


@dataclass(frozen=True)
class DeltaCoeffs:
    """Coefficients of x*H0 + y*L0 + z*E + w*F + u*D."""

    x: Fraction
    y: Fraction
    z: Fraction
    w: Fraction
    u: Fraction

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, rat(getattr(self, f.name)))

    def as_tuple(self) -> tuple[Fraction, ...]:
        return self.x, self.y, self.z, self.w, self.u

    def as_dict(self) -> dict[str, Fraction]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


H = DivClass(1, 0, 0, 0)
L = DivClass(0, 1, 0, 0)
E = DivClass(0, 0, 1, 0)
F = DivClass(0, 0, 0, 1)

LINE_L = CurveClass(1, 0, 0, 0)
LINE_H = CurveClass(0, 1, 0, 0)
FIBRE_E = CurveClass(0, 0, 1, 0)
FIBRE_F = CurveClass(0, 0, 0, 1)


class NamedCurves(NamedTuple):
    l0: CurveClass
    h0: CurveClass
    e0: CurveClass
    f: CurveClass


class NamedDivisors(NamedTuple):
    H0: DivClass
    L0: DivClass
    D: DivClass


def pair(D: DivClass, c: CurveClass) -> Fraction:
    return D.h * c.cl + D.l * c.ch - D.e * c.ce - D.f * c.cf


def named_curves(g: Geometry) -> NamedCurves:
    """Strict transforms of lines meeting the blow-up centres once."""
    return NamedCurves(
        l0=LINE_L - FIBRE_E,
        h0=LINE_H - g.d * FIBRE_E,
        e0=FIBRE_E - FIBRE_F,
        f=FIBRE_F,
    )


def named_divisors(g: Geometry) -> NamedDivisors:
    return NamedDivisors(H0=H - E, L0=L - F, D=g.d * L - E - F)


def anticanonical(g: Geometry) -> DivClass:
    n, k = g.n, g.k
    return DivClass(n - k + 1, k + 1, -(n - k), -(k - 1))


def delta_class(c: DeltaCoeffs, g: Geometry) -> DivClass:
    return DivClass(c.x, c.y + g.d * c.u, -c.x + c.z - c.u, -c.y + c.w - c.u)


def delta_to_greek(c: DeltaCoeffs, g: Geometry) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(alpha, beta, gamma, delta): the boundary's coordinates in (H, L, E, F)."""
    return delta_class(c, g).coords()
