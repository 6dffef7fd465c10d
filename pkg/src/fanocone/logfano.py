"""Boundary divisors supported on H0, L0, E, F, D and the log Fano decision.

With Delta = x*H0 + y*L0 + z*E + w*F + u*D the pair is klt exactly when all
five coefficients lie in [0, 1) (the support is snc), and -(K + Delta) is
ample exactly when four strict linear rows hold.  Infeasibility of that
system says nothing about boundaries of other shapes, so it is reported as
``unknown`` and never as a negative answer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact_core import LE, LT, InfeasibleWitnessError, LinIneq, LinIneqSystem, find_witness
from .lattice import DeltaCoeffs, Geometry, delta_to_greek
from .positivity import CriterionRow, ample_criterion, criterion_rows

VARS = ("x", "y", "z", "w", "u")


class Status(enum.Enum):
    YES = "yes_with_witness"
    UNKNOWN = "unknown"


class Source(enum.Enum):
    PAPER_TABLE = "paper_table"
    FM_SEARCH = "fm_search"


@dataclass(frozen=True)
class LogFanoVerdict:
    status: Status
    witness: Optional[DeltaCoeffs]
    source: Source

    def __post_init__(self):
        if (self.status is Status.YES) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the status is yes")

    @property
    def is_yes(self) -> bool:
        return self.status is Status.YES


@dataclass(frozen=True)
class PairCheck:
    klt: bool
    rows: list[CriterionRow]
    ample: bool

    @property
    def log_fano(self) -> bool:
        return self.klt and self.ample


def klt_check(c: DeltaCoeffs) -> bool:
    return all(0 <= v < 1 for v in c.as_tuple())


def logfano_system(g: Geometry) -> LinIneqSystem:
    n, k, d = g.n, g.k, g.d
    rows = [LinIneq.of({v: -1}, 0, LE) for v in VARS]
    rows += [LinIneq.of({v: 1}, -1, LT) for v in VARS]
    rows += [
        LinIneq.of({"z": 1, "u": -1}, -1, LT),
        LinIneq.of({"y": 1, "x": -d, "z": d}, -(k + 1 - (n - k) * d), LT),
        LinIneq.of({"x": 1, "y": -1, "z": -1, "w": 1}, -(n - 2 * k + 1), LT),
        LinIneq.of({"y": 1, "w": -1, "u": 1}, -(k - 1), LT),
    ]
    return LinIneqSystem(VARS, rows)


def satisfies_system(c: DeltaCoeffs, g: Geometry) -> bool:
    return logfano_system(g).satisfied_by(c.as_dict())


def check_pair(c: DeltaCoeffs, g: Geometry) -> PairCheck:
    """Evaluate the klt box and the four ampleness rows separately."""
    greek = delta_to_greek(c, g)
    return PairCheck(klt=klt_check(c), rows=criterion_rows(greek, g), ample=ample_criterion(greek, g))


def _verified(c: DeltaCoeffs, g: Geometry) -> DeltaCoeffs:
    if not satisfies_system(c, g):
        raise InfeasibleWitnessError(f"boundary {c.as_tuple()} fails the log Fano system at {g}")
    return c


def find_boundary(g: Geometry) -> LogFanoVerdict:
    witness = find_witness(logfano_system(g))
    if witness is None:
        return LogFanoVerdict(Status.UNKNOWN, None, Source.FM_SEARCH)
    c = DeltaCoeffs(*(witness[v] for v in VARS))
    return LogFanoVerdict(Status.YES, _verified(c, g), Source.FM_SEARCH)


def closed_form_feasible(g: Geometry) -> bool:
    n, k, d = g.n, g.k, g.d
    if n == 3:
        return True
    if d == 1 and 2 * k - 2 <= n <= 2 * k + 1:
        return True
    return (n, k, d) in {(4, 2, 2), (4, 3, 2), (5, 3, 2)}


_HALF = Fraction(1, 2)

_SPORADIC = {
    (4, 2, 2): (Fraction(3, 4), 0, 0, 0, 0),
    (4, 3, 2): (Fraction(1, 8), _HALF, Fraction(3, 4), 0, 0),
    (5, 3, 2): (_HALF, _HALF, Fraction(1, 8), 0, 0),
}

_D1_BY_OFFSET = {
    -2: (0, _HALF, Fraction(3, 4), 0, 0),
    -1: (0, _HALF, 0, 0, 0),
    0: (0, 0, 0, 0, 0),
    1: (_HALF, 0, 0, 0, 0),
}


def paper_witness(g: Geometry) -> Optional[DeltaCoeffs]:
    """The hand-picked boundary for the cases known to be log Fano, else None."""
    n, k, d = g.n, g.k, g.d
    if n == 3:
        if d == 1:
            return DeltaCoeffs(0, 0, _HALF, 0, 0)
        t = Fraction(d - 2, d - 1)
        return DeltaCoeffs(t, t, Fraction(1, 2 * d), 0, 0)
    if (n, k, d) in _SPORADIC:
        return DeltaCoeffs(*_SPORADIC[n, k, d])
    if d == 1 and (n - 2 * k) in _D1_BY_OFFSET:
        return DeltaCoeffs(*_D1_BY_OFFSET[n - 2 * k])
    return None


def paper_verdict(g: Geometry) -> LogFanoVerdict:
    c = paper_witness(g)
    if c is None:
        return LogFanoVerdict(Status.UNKNOWN, None, Source.PAPER_TABLE)
    return LogFanoVerdict(Status.YES, _verified(c, g), Source.PAPER_TABLE)
