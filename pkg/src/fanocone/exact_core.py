"""Exact rational scalars and Fourier-Motzkin feasibility with strict rows.

Rows are read as ``sum(coeffs[v] * v) + constant REL 0`` with ``REL`` either
``<`` or ``<=``.  Elimination keeps track of strictness, so half-open
regions such as ``0 <= x < 1`` are handled without epsilon margins.
"""

from __future__ import annotations

import re
from math import gcd
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]

LT = "<"
LE = "<="
_RELATIONS = (LT, LE)

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def rat(value: RatLike) -> Fraction:
    """Coerce ``value`` to an exact rational; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; anything else raises ValueError."""
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r} (expected p/q or an integer)")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rat(q: Fraction) -> str:
    """Wire format: ``p/q`` in lowest terms, ``p`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class InfeasibleWitnessError(AssertionError):
    """A computed assignment failed to re-verify; indicates a bug, not bad input."""


@dataclass(frozen=True)
class LinIneq:
    coeffs: tuple[tuple[str, Fraction], ...]
    constant: Fraction = Fraction(0)
    relation: str = LT

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"relation must be one of {_RELATIONS}, got {self.relation!r}")
        for name, _ in self.coeffs:
            if not isinstance(name, str) or not name:
                raise ValueError("variable names must be nonempty strings")

    @classmethod
    def of(cls, coeffs: Mapping[str, RatLike], constant: RatLike = 0, relation: str = LT) -> "LinIneq":
        """Build a row from a mapping; zero coefficients are dropped."""
        items = tuple(sorted((v, rat(c)) for v, c in coeffs.items() if rat(c) != 0))
        return cls(items, rat(constant), relation)

    @property
    def strict(self) -> bool:
        return self.relation == LT

    def coeff(self, var: str) -> Fraction:
        for name, c in self.coeffs:
            if name == var:
                return c
        return Fraction(0)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.coeffs)

    def lhs(self, assignment: Mapping[str, Fraction]) -> Fraction:
        """Value of ``sum(coeffs * vars) + constant``; missing variables count as 0."""
        total = self.constant
        for name, c in self.coeffs:
            total += c * assignment.get(name, 0)
        return total

    def holds(self, assignment: Mapping[str, Fraction]) -> bool:
        value = self.lhs(assignment)
        return value < 0 if self.strict else value <= 0

    def __str__(self) -> str:
        terms = [f"{format_rat(c)}*{v}" for v, c in self.coeffs]
        if self.constant != 0 or not terms:
            terms.append(format_rat(self.constant))
        return " + ".join(terms) + f" {self.relation} 0"


@dataclass(frozen=True)
class LinIneqSystem:
    vars: tuple[str, ...]
    rows: tuple[LinIneq, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")
        known = set(self.vars)
        for row in self.rows:
            missing = row.variables - known
            if missing:
                raise ValueError(f"row {row} uses undeclared variables {sorted(missing)}")

    def satisfied_by(self, assignment: Mapping[str, Fraction]) -> bool:
        return all(row.holds(assignment) for row in self.rows)

    def __str__(self) -> str:
        return "{" + "; ".join(str(r) for r in self.rows) + "}"


@dataclass(frozen=True)
class Witness:
    assignment: Mapping[str, Fraction] = field(default_factory=dict)

    def __getitem__(self, var: str) -> Fraction:
        return self.assignment[var]


# Internally a row is (coeffs, constant, strict) with integer entries aligned
# to a variable tuple and scaled to be primitive, so positive multiples of
# the same row collapse to one key.
_Dense = tuple[tuple[int, ...], int, bool]


def _primitive(coeffs: Sequence[int], constant: int, strict: bool) -> _Dense:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    g = gcd(g, constant)
    if g > 1:
        coeffs = [c // g for c in coeffs]
        constant //= g
    return tuple(coeffs), constant, strict


def _to_dense(row: LinIneq, vars: Sequence[str]) -> _Dense:
    values = [row.coeff(v) for v in vars] + [row.constant]
    scale = 1
    for q in values:
        scale = scale * q.denominator // gcd(scale, q.denominator)
    ints = [int(q * scale) for q in values]
    return _primitive(ints[:-1], ints[-1], row.strict)


def _from_dense(row: _Dense, vars: Sequence[str]) -> LinIneq:
    coeffs, constant, strict = row
    items = tuple((v, Fraction(c)) for v, c in sorted(zip(vars, coeffs)) if c != 0)
    return LinIneq(items, Fraction(constant), LT if strict else LE)


def _eliminate_dense(rows: Sequence[_Dense], idx: int) -> list[_Dense]:
    keep, pos, neg = [], [], []
    for row in rows:
        c = row[0][idx]
        if c > 0:
            pos.append(row)
        elif c < 0:
            neg.append(row)
        else:
            keep.append(row)
    out = []
    for pc, pk, ps in pos:
        a = pc[idx]
        for nc, nk, ns in neg:
            b = -nc[idx]
            coeffs = [b * x + a * y for x, y in zip(pc, nc)]
            del coeffs[idx]
            out.append(_primitive(coeffs, b * pk + a * nk, ps or ns))
    for c, k, st in keep:
        out.append((c[:idx] + c[idx + 1:], k, st))
    return list(dict.fromkeys(out))


def eliminate(system: LinIneqSystem, var: str) -> LinIneqSystem:
    """Project out ``var``; the result is feasible iff ``system`` is."""
    if var not in system.vars:
        raise KeyError(f"unknown variable {var!r}; system has {list(system.vars)}")
    idx = system.vars.index(var)
    rest = system.vars[:idx] + system.vars[idx + 1:]
    dense = [_to_dense(r, system.vars) for r in system.rows]
    return LinIneqSystem(rest, tuple(_from_dense(r, rest) for r in _eliminate_dense(dense, idx)))


def _constant_rows_hold(rows: Iterable[_Dense]) -> bool:
    return all(k < 0 if strict else k <= 0 for _, k, strict in rows)


def _projections(system: LinIneqSystem) -> list[list[_Dense]]:
    # chain[i] holds the rows over vars[i:], after eliminating vars[:i].
    chain = [[_to_dense(r, system.vars) for r in system.rows]]
    for _ in system.vars:
        chain.append(_eliminate_dense(chain[-1], 0))
    return chain


def feasible(system: LinIneqSystem) -> bool:
    """True iff some rational point satisfies every row."""
    return _constant_rows_hold(_projections(system)[-1])


def _choose(lo: Optional[tuple[Fraction, bool]], hi: Optional[tuple[Fraction, bool]]) -> Fraction:
    # Bounds are (value, strict).  Caller guarantees the interval is nonempty.
    if lo is None and hi is None:
        return Fraction(0)
    if hi is None:
        return lo[0] + 1
    if lo is None:
        return hi[0] - 1
    if lo[0] == hi[0]:
        return lo[0]
    return (lo[0] + hi[0]) / 2


def _interval(rows: Sequence[_Dense], values: Sequence[Fraction]):
    # rows are over (var, *later vars); values are the later vars' assignments
    lo: Optional[tuple[Fraction, bool]] = None
    hi: Optional[tuple[Fraction, bool]] = None
    for coeffs, constant, strict in rows:
        a = coeffs[0]
        if a == 0:
            continue
        rest = constant + sum((c * v for c, v in zip(coeffs[1:], values) if c), Fraction(0))
        bound = (-rest / a, strict)
        if a > 0:
            if hi is None or bound[0] < hi[0] or (bound[0] == hi[0] and strict):
                hi = bound
        else:
            if lo is None or bound[0] > lo[0] or (bound[0] == lo[0] and strict):
                lo = bound
    if lo is not None and hi is not None:
        if lo[0] > hi[0] or (lo[0] == hi[0] and (lo[1] or hi[1])):
            raise InfeasibleWitnessError(f"empty interval: {lo} .. {hi}")
    return lo, hi


def find_witness(system: LinIneqSystem) -> Optional[Witness]:
    """A satisfying rational assignment, or None when the system is infeasible.

    Variables are assigned in reverse elimination order.  Each one takes the
    midpoint of its allowed interval, ``lower + 1`` / ``upper - 1`` when
    half-bounded, and 0 when unconstrained.
    """
    chain = _projections(system)
    if not _constant_rows_hold(chain[-1]):
        return None
    values: list[Fraction] = []
    for idx in range(len(system.vars) - 1, -1, -1):
        values.insert(0, _choose(*_interval(chain[idx], values)))
    assignment = dict(zip(system.vars, values))
    bad = [str(r) for r in system.rows if not r.holds(assignment)]
    if bad:
        raise InfeasibleWitnessError(f"witness {assignment} violates {bad}")
    return Witness(assignment)
