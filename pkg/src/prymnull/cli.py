"""Command-line entry point.

    prymnull verify  --g-from 5 --g-to 12 [--json]
    prymnull class   --g 5 --which even --format json|latex
    prymnull table   --curve F --g 5 --i 2 [--format json|text]
    prymnull counts  --g 5
    prymnull oracle  --g 3
    prymnull quartic --seed 0 [--emit-coeffs]

Exit status: 0 when every check passes, 1 on a verification mismatch,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import arf, counting, quartic, solver
from .class_space import MIN_GENUS
from .curves import CURVE_NAMES, INDEXED, R_CURVES, CurveError, pair, prym_null_numbers, row
from .known_classes import CLASSES, mu, theta_null_class
from .render import dumps, to_latex

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

# short spellings accepted by --curve
CURVE_ALIASES = {"F": "Fi", "G": "Gi", "H": "Hi", "C": "Ci"}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prymnull", description="Prym-null divisor class calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="rederive the Prym-null classes from test curves")
    p.add_argument("--g-from", type=int, default=MIN_GENUS)
    p.add_argument("--g-to", type=int, default=12)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("class", help="emit a closed-form divisor class")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--which", choices=sorted(CLASSES), required=True)
    p.add_argument("--format", choices=["json", "latex"], default="json")

    p = sub.add_parser("table", help="intersection row of one test curve")
    p.add_argument("--curve", required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("counts", help="theta-characteristic counts and boundary degrees")
    p.add_argument("--g", type=int, required=True)

    p = sub.add_parser("oracle", help="brute-force the counts over GF(2)")
    p.add_argument("--g", type=int, required=True)

    p = sub.add_parser("quartic", help="octic discriminant of a seeded random quartic pencil")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--emit-coeffs", action="store_true")
    return parser


def _verify(args, out) -> int:
    if args.g_from < MIN_GENUS or args.g_to < args.g_from:
        raise _Usage(f"need {MIN_GENUS} <= --g-from <= --g-to")
    reports = []
    for g in range(args.g_from, args.g_to + 1):
        reports.extend(solver.assemble_and_verify(g))
    ok = all(r.verdict for r in reports)
    if args.json:
        print(dumps({"all_pass": ok, "reports": [r.to_json() for r in reports]}), file=out)
    else:
        for r in reports:
            parity = "even" if r.parity == "+" else "odd"
            status = "PASS" if r.verdict else "FAIL"
            print(f"g={r.genus:<3} {parity:<5} {status}  lambda={r.solved['lambda']}", file=out)
            for line in r.residuals:
                print(f"    {line}", file=out)
        print("all verdicts true" if ok else "MISMATCH", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def _class(args, out) -> int:
    if args.g < MIN_GENUS:
        raise _Usage(f"--g must be at least {MIN_GENUS}")
    c = CLASSES[args.which](args.g)
    if args.format == "json":
        print(dumps(c.to_json()), file=out)
    else:
        print(to_latex(args.which, c), file=out)
    return EXIT_OK


def _table(args, out) -> int:
    name = CURVE_ALIASES.get(args.curve, args.curve)
    if name not in CURVE_NAMES:
        raise _Usage(f"unknown curve {args.curve!r}; choose from {', '.join(CURVE_NAMES)} (or F, G, H, C)")
    if args.g < MIN_GENUS:
        raise _Usage(f"--g must be at least {MIN_GENUS}")
    try:
        r = row(name, args.g, args.i)
    except CurveError as exc:
        raise _Usage(str(exc)) from None
    data = r.to_json()
    if name in R_CURVES:
        pn = prym_null_numbers(name, args.g, args.i)
        data["prym_null"] = {"even": pn.even, "odd": pn.odd}
    elif name == "Y0n":
        data["theta_null"] = str(pair(r, theta_null_class(args.g)))
        data["mu"] = mu(args.g)
    if args.format == "json":
        print(dumps(data), file=out)
        return EXIT_OK
    cells = [("class", "entry")] + list(data["row"].items())
    if "prym_null" in data:
        cells += [("P+null", str(data["prym_null"]["even"])), ("P-null", str(data["prym_null"]["odd"]))]
    if "theta_null" in data:
        cells += [("Theta_null", data["theta_null"])]
    width = max(len(a) for a, _ in cells)
    print(f"{r.display_name}  (g={args.g}, space {r.space.value})", file=out)
    for a, b in cells:
        print(f"  {a:<{width}}  {b:>}", file=out)
    return EXIT_OK


def _counts(args, out) -> int:
    if args.g < 1:
        raise _Usage("--g must be a positive integer")
    data = counting.count_table(args.g).to_json()
    data["boundary_degrees"] = counting.boundary_degrees(args.g)
    print(dumps(data), file=out)
    return EXIT_OK


def _oracle(args, out) -> int:
    if not 1 <= args.g <= arf.MAX_ORACLE_GENUS:
        raise _Usage(f"--g must lie in 1..{arf.MAX_ORACLE_GENUS}")
    closed = counting.count_table(args.g)
    found = arf.oracle_counts(args.g)
    ok = True
    print(f"{'field':<11}{'closed':>10}{'oracle':>10}  verdict", file=out)
    for f in counting.CountTable.FIELDS:
        a, b = getattr(closed, f), getattr(found, f)
        ok &= a == b
        print(f"{f:<11}{a:>10}{b:>10}  {'MATCH' if a == b else 'MISMATCH'}", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def _quartic(args, out) -> int:
    pencil = quartic.PencilQuartic.random(args.seed)
    c3, c4, c5 = quartic.extract_quadric(quartic.restrict_to_tangent(pencil))
    report = quartic.analyse(pencil, args.seed)
    data = report.to_json()
    if args.emit_coeffs:
        data["pencil"] = pencil.to_json()
        data["quadric"] = {name: [str(x) for x in f.coeffs] for name, f in (("uu", c3), ("uv", c4), ("vv", c5))}
    print(dumps(data), file=out)
    return EXIT_OK


class _Usage(Exception):
    pass


COMMANDS = {
    "verify": _verify,
    "class": _class,
    "table": _table,
    "counts": _counts,
    "oracle": _oracle,
    "quartic": _quartic,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except _Usage as exc:
        print(f"prymnull {args.command}: error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
