"""Command-line front end.

Exit codes: 0 affirmative, 1 negative or unknown, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from typing import Optional, Sequence

from . import classifier, cones, logfano
from .exact_core import format_rat, parse_rat
from .lattice import DeltaCoeffs, DivClass, Geometry, InvalidGeometry, delta_to_greek

THREADS_ENV = "FANOCONE_THREADS"
UNKNOWN_TEXT = "unknown (no boundary of the 5-generator form)"


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/2" through as a positional value
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def _rational(text: str):
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fmt(values) -> str:
    return "(" + ", ".join(format_rat(v) for v in values) + ")"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fanocone", description="Positivity and log Fano checks for double blow-ups of P^(n-k) x P^k.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify every triple up to the given bounds")
    p.set_defaults(sub_parser=p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--format", choices=classifier.FORMATS, default="table")

    p = sub.add_parser("witness", help="search for a boundary divisor")
    p.set_defaults(sub_parser=p)
    for name in ("n", "k", "d"):
        p.add_argument(name, type=int)

    p = sub.add_parser("check-delta", help="test a boundary x*H0 + y*L0 + z*E + w*F + u*D")
    p.set_defaults(sub_parser=p)
    for name in ("n", "k", "d"):
        p.add_argument(name, type=int)
    for name in logfano.VARS:
        p.add_argument(name, type=_rational)

    p = sub.add_parser("cone", help="nef and effective cone queries for a divisor class")
    p.set_defaults(sub_parser=p)
    for name in ("n", "k", "d"):
        p.add_argument(name, type=int)
    p.add_argument("--class", dest="cls", nargs=4, type=_rational, required=True,
                   metavar=("H", "L", "E", "F"), help="coordinates in the basis (H, L, E, F)")
    return parser


def _geometry(parser: argparse.ArgumentParser, args) -> Geometry:
    try:
        return Geometry(args.n, args.k, args.d)
    except InvalidGeometry as exc:
        parser.error(f"invalid triple: {exc}")


def _threads(parser: argparse.ArgumentParser) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        parser.error(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def cmd_classify(parser, args) -> int:
    if args.n_max < 3:
        parser.error("n-max must be ≥ 3")
    if args.d_max < 1:
        parser.error("d-max must be ≥ 1")
    rows = classifier.sweep(args.n_max, args.d_max, workers=_threads(parser))
    sys.stdout.write(classifier.render(rows, args.format))
    return 0


def cmd_witness(parser, args) -> int:
    g = _geometry(parser, args)
    verdict = logfano.find_boundary(g)
    if not verdict.is_yes:
        print(UNKNOWN_TEXT)
        return 1
    c = verdict.witness
    print(f"geometry (n,k,d) = {g}")
    for name, value in c.as_dict().items():
        print(f"{name} = {format_rat(value)}")
    print(f"(alpha, beta, gamma, delta) = {_fmt(delta_to_greek(c, g))}")
    print("verified: log Fano pair")
    return 0


def cmd_check_delta(parser, args) -> int:
    g = _geometry(parser, args)
    c = DeltaCoeffs(*(getattr(args, v) for v in logfano.VARS))
    check = logfano.check_pair(c, g)
    print(f"geometry (n,k,d) = {g}")
    print(f"(x, y, z, w, u) = {_fmt(c.as_tuple())}")
    print(f"(alpha, beta, gamma, delta) = {_fmt(delta_to_greek(c, g))}")
    print(f"klt (0 <= x,y,z,w,u < 1): {'yes' if check.klt else 'no'}")
    for i, row in enumerate(check.rows, 1):
        ok = "ok" if row.lhs < row.rhs else "FAIL"
        print(f"row {i}: {row.label} = {format_rat(row.lhs)} < {format_rat(row.rhs)}  {ok}")
    print(f"-(K+Delta) ample: {'yes' if check.ample else 'no'}")
    print(f"log Fano pair: {'yes' if check.log_fano else 'no'}")
    return 0 if check.log_fano else 1


def cmd_cone(parser, args) -> int:
    g = _geometry(parser, args)
    D = DivClass(*args.cls)
    print(f"geometry (n,k,d) = {g}")
    print(f"class (H, L, E, F) = {_fmt(D.coords())}")
    print(f"nef coordinates = {_fmt(cones.nef_coords(D, g))}")
    print(f"nef: {'yes' if cones.is_nef(D, g) else 'no'}")
    print(f"ample: {'yes' if cones.is_ample(D, g) else 'no'}")
    cert = cones.effective_membership(D, g)
    if cert is None:
        print("effective: not effective")
    else:
        print(f"effective: yes, (H0, L0, E, F, D) coefficients {_fmt(cert)}")
    print(f"big: {'yes' if cones.is_big(D, g) else 'no'}")
    return 0


_COMMANDS = {
    "classify": cmd_classify,
    "witness": cmd_witness,
    "check-delta": cmd_check_delta,
    "cone": cmd_cone,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args.sub_parser, args)


if __name__ == "__main__":
    sys.exit(main())
