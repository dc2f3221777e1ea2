"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 numeric or degenerate input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Sequence

from .chain import build_chain, minimize_on_axis
from .dominance import compute_threshold
from .geometry import Point2
from .symmetry import detect_extension
from .weber import SolveConfig, solve_weber

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_points(path: str | Path) -> list[Point2]:
    """Load a point file: ``x,y`` per line (``#`` comments) or a JSON array."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    if path.suffix.lower() == ".json":
        try:
            raw = json.loads(text)
            pts = [Point2(float(x), float(y)) for x, y in raw]
        except (json.JSONDecodeError, TypeError, ValueError) as exc:
            raise ValueError(f"{path}: expected a JSON array of [x, y] pairs ({exc})") from exc
    else:
        pts = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = [f.strip() for f in line.split(",")]
            if len(fields) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'x,y', got {line!r}")
            try:
                pts.append(Point2(float(fields[0]), float(fields[1])))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
    if not pts:
        raise ValueError(f"{path}: no points")
    return pts


def _num(value: float, precise: bool) -> float:
    # "+ 0.0" folds -0.0 into 0.0
    return (float(value) if precise else float(f"{value:.6g}")) + 0.0


def _pt(p: Point2 | None, precise: bool):
    return None if p is None else [_num(p.x, precise), _num(p.y, precise)]


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_chain(args) -> None:
    res = minimize_on_axis(build_chain(args.n, args.k))
    _emit({
        "n": args.n,
        "k": args.k,
        "x_star": _num(res.x_star, args.precise),
        "psi_star": _num(res.psi_star, args.precise),
        "at_root": res.at_root,
    })


def cmd_table(args) -> None:
    if args.k > args.n_max:
        raise ValueError(f"need k <= n-max, got k={args.k}, n-max={args.n_max}")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "psi", "x"])
    for n in range(max(args.k, 3), args.n_max + 1):
        res = minimize_on_axis(build_chain(n, args.k))
        writer.writerow([n, repr(_num(res.psi_star, args.precise)), repr(_num(res.x_star, args.precise))])


def cmd_nk(args) -> None:
    res = compute_threshold(args.k)
    _emit({
        "k": res.k,
        "N": res.n_threshold,
        "certificate_low": _num(res.certificate_low, args.precise),
        "certificate_high": _num(res.certificate_high, args.precise),
    })


def cmd_solve(args) -> None:
    sol = solve_weber(read_points(args.file), SolveConfig())
    _emit({
        "location": _pt(sol.location, args.precise),
        "objective": _num(sol.objective, args.precise),
        "iterations": sol.iterations,
        "converged": sol.converged,
        "at_fixed_point_index": sol.at_fixed_point_index,
    })


def cmd_detect(args) -> None:
    rep = detect_extension(read_points(args.file))
    p = args.precise
    _emit({
        "is_extension_member": rep.is_extension_member,
        "pivot": _pt(rep.pivot, p),
        "pivot_index": rep.pivot_index,
        "axis_direction": _pt(rep.axis_direction, p),
        "base_set": None if rep.base_set is None else [_pt(q, p) for q in rep.base_set],
        "half_angles": None if rep.spec is None else [_num(t, p) for t in rep.spec.half_angles],
        "condition_a_value": None if rep.condition_a_value is None else _num(rep.condition_a_value, p),
        "weber_at_pivot": rep.weber_at_pivot,
    })


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fwchain", description="Fermat-Weber points of regular chains and symmetric point sets.")
    parser.add_argument("--precise", action="store_true", help="emit full double precision instead of 6 significant figures")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chain", help="Weber point of the chain C_n(k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("table", help="CSV table n,psi,x for n = k..n-max")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("nk", help="threshold N(k) for odd k")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_nk)

    p = sub.add_parser("solve", help="Weber point of the points in FILE")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("detect", help="extension-family membership of the points in FILE")
    p.add_argument("file")
    p.set_defaults(func=cmd_detect)

    for action in sub.choices.values():
        action.add_argument("--precise", action="store_true", default=argparse.SUPPRESS,
                            help=argparse.SUPPRESS)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        args.func(args)
    except UsageError as exc:
        print(f"fwchain: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"fwchain: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
