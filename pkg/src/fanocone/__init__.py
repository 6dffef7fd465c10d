"""Exact positivity, cone and log Fano computations for double blow-ups of P^(n-k) x P^k."""

from .exact_core import LinIneq, LinIneqSystem, Witness, eliminate, feasible, find_witness, format_rat, parse_rat
from .lattice import CurveClass, DeltaCoeffs, DivClass, Geometry, InvalidGeometry

__all__ = [
    "CurveClass",
    "DeltaCoeffs",
    "DivClass",
    "Geometry",
    "InvalidGeometry",
    "LinIneq",
    "LinIneqSystem",
    "Witness",
    "eliminate",
    "feasible",
    "find_witness",
    "format_rat",
    "parse_rat",
]
