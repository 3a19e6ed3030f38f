"""Command line: ``verify``, ``planewave`` and ``dump``.

Exit status is 0 when everything passes, 1 on a failed check or an
off-shell momentum, and 2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .exact import parse_rational
from .representations import REPRESENTATION_NAMES, build
from .suites import SUITE_NAMES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kdpsplit", description="Exact verification of split KDP wave equations.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all", choices=SUITE_NAMES)
    v.add_argument("--format", default="text", choices=("json", "text"))
    v.add_argument("--timings", action="store_true", help="include wall-clock times (output is then not reproducible)")
    v.add_argument("--perturb", metavar="MATRICES", choices=REPRESENTATION_NAMES,
                   help="append a negative control: the algebra check on a corrupted copy of MATRICES")

    from .planewave import SOLVE_LABELS
    p = sub.add_parser("planewave", help="solve a system at an exact on-shell momentum")
    p.add_argument("--system", required=True, choices=SOLVE_LABELS)
    p.add_argument("--mass", required=True, help="rational a or a/b")
    p.add_argument("--p", required=True, help="four comma-separated rationals p^0,p^1,p^2,p^3")
    p.add_argument("--format", default="text", choices=("json", "text"))

    d = sub.add_parser("dump", help="print a matrix set")
    d.add_argument("--matrices", required=True, metavar="NAME",
                   help="one of: " + ", ".join(REPRESENTATION_NAMES))
    d.add_argument("--format", default="text", choices=("json", "text"))
    return ap


def _rationals(text: str, count: int | None = None):
    try:
        values = [parse_rational(t) for t in text.split(",")]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if count is not None and len(values) != count:
        raise UsageError(f"expected {count} comma-separated values, got {len(values)}")
    return values


def _verify(args, out) -> int:
    report = run_suite(args.suite, args.perturb)
    out.write(report.to_json(args.timings) if args.format == "json" else report.to_text(args.timings))
    return EXIT_OK if report.ok else EXIT_FAIL


def _planewave(args, out, err) -> int:
    from .planewave import OffShellError, OnShellMomentum, solve
    from .exact import GaussianRational
    p = [GaussianRational(x) for x in _rationals(args.p, 4)]
    (m,) = _rationals(args.mass, 1)
    try:
        mom = OnShellMomentum(tuple(p), GaussianRational(m))
    except OffShellError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sol = solve(args.system, mom)
    if args.format == "json":
        out.write(json.dumps(sol.to_dict(), indent=2, sort_keys=True) + "\n")
    else:
        out.write(sol.dump() + "\n")
    return EXIT_OK


def _dump(args, out) -> int:
    if args.matrices not in REPRESENTATION_NAMES:
        raise UsageError(f"unknown matrix set {args.matrices!r}; expected one of {', '.join(REPRESENTATION_NAMES)}")
    rep = build(args.matrices)
    out.write(json.dumps(rep.to_dict(), indent=2) + "\n" if args.format == "json" else rep.to_text() + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "verify":
            return _verify(args, out)
        if args.command == "planewave":
            return _planewave(args, out, err)
        return _dump(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
