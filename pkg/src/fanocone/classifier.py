"""Per-triple classification rows, parameter sweeps and their renderings."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from .exact_core import format_rat
from .lattice import DeltaCoeffs, Geometry
from .logfano import find_boundary, satisfies_system
from .positivity import MinusKStatus, minus_K_big, minus_K_status

COLUMNS = ("n", "k", "d", "fano", "weak_fano", "log_fano", "minus_k_big", "witness")
FORMATS = ("table", "csv", "json")

_ZERO = DeltaCoeffs(0, 0, 0, 0, 0)


@dataclass(frozen=True)
class ClassificationRow:
    n: int
    k: int
    d: int
    fano: bool
    weak_fano: bool
    log_fano: str
    minus_k_big: bool
    witness: Optional[DeltaCoeffs]

    def __post_init__(self):
        if self.log_fano not in ("yes", "unknown"):
            raise ValueError(f"log_fano must be 'yes' or 'unknown', got {self.log_fano!r}")
        if self.fano and not self.weak_fano:
            raise ValueError(f"{self.triple}: Fano but not weak Fano")
        if self.weak_fano and self.log_fano != "yes":
            raise ValueError(f"{self.triple}: weak Fano but no boundary found")
        if (self.log_fano == "yes") != (self.witness is not None):
            raise ValueError(f"{self.triple}: witness must accompany log_fano=yes")

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.n, self.k, self.d


def classify(g: Geometry) -> ClassificationRow:
    if not isinstance(g, Geometry):
        raise TypeError("classify expects a Geometry")
    status = minus_K_status(g)
    fano = status is MinusKStatus.AMPLE
    verdict = find_boundary(g)
    witness = verdict.witness
    # Delta = 0 only certifies log Fano when -K is already ample.
    if fano and satisfies_system(_ZERO, g):
        witness = _ZERO
    return ClassificationRow(
        n=g.n,
        k=g.k,
        d=g.d,
        fano=fano,
        weak_fano=status is not MinusKStatus.NOT_NEF,
        log_fano="yes" if verdict.is_yes else "unknown",
        minus_k_big=minus_K_big(g),
        witness=witness,
    )


def triples(n_max: int, d_max: int) -> list[Geometry]:
    return [Geometry(n, k, d) for n in range(3, n_max + 1) for k in range(2, n) for d in range(1, d_max + 1)]


def sweep(n_max: int, d_max: int, workers: int = 1) -> list[ClassificationRow]:
    """Classify every valid triple with n <= n_max, d <= d_max, ordered by (n, k, d)."""
    if n_max < 3:
        raise ValueError("n-max must be >= 3")
    if d_max < 1:
        raise ValueError("d-max must be >= 1")
    geoms = triples(n_max, d_max)
    if workers <= 1 or len(geoms) < 2:
        return [classify(g) for g in geoms]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(classify, geoms, chunksize=64))


def format_witness(c: Optional[DeltaCoeffs]) -> str:
    if c is None:
        return ""
    return "(" + ",".join(format_rat(v) for v in c.as_tuple()) + ")"


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _cells(row: ClassificationRow) -> list[str]:
    return [
        str(row.n),
        str(row.k),
        str(row.d),
        _flag(row.fano),
        _flag(row.weak_fano),
        row.log_fano,
        _flag(row.minus_k_big),
        format_witness(row.witness),
    ]


def _record(row: ClassificationRow) -> dict:
    witness = None if row.witness is None else {k: format_rat(v) for k, v in row.witness.as_dict().items()}
    return {
        "n": row.n,
        "k": row.k,
        "d": row.d,
        "fano": row.fano,
        "weak_fano": row.weak_fano,
        "log_fano": row.log_fano,
        "minus_k_big": row.minus_k_big,
        "witness": witness,
    }


def render(rows: Iterable[ClassificationRow], format: str = "table") -> str:
    rows = list(rows)
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        writer.writerows(_cells(r) for r in rows)
        return buf.getvalue()
    if format == "json":
        return json.dumps([_record(r) for r in rows], indent=2) + "\n"
    if format == "table":
        grid = [list(COLUMNS)] + [_cells(r) for r in rows]
        widths = [max(len(line[i]) for line in grid) for i in range(len(COLUMNS))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in grid]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}; choose from {FORMATS}")
