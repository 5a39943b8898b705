"""Command-line entry point: ``bohrlab {radius,table,sweep,verify,check-forms}``.

Exit codes: 0 success, 1 verification failure, 2 no root, 3 invalid
arguments, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import oracle
from .radius_eqs import InvalidProblem, Kind, RadiusProblem, radius_equation
from .rootfind import RADIUS_TOL, RootResult, Status, smallest_root
from .specfun import M_STAR
from .tables import TABLES, round3

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_NO_ROOT = 2
EXIT_USAGE = 3
EXIT_IO = 4

RECORD_KEYS = ("theorem", "M", "N", "m", "p", "radius", "residual", "status")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class OutputRecord:
    theorem: str
    M: float
    N: int | None
    m: int | None
    p: int | None
    radius: float | None
    residual: float | None
    status: str

    @classmethod
    def from_result(cls, problem: RadiusProblem, result: RootResult) -> "OutputRecord":
        radius = None if result.radius is None else round(result.radius, 6)
        return cls(problem.kind.value, problem.M, problem.N, problem.m, problem.p,
                   radius, result.residual, result.status.value)

    def text(self) -> str:
        parts = [f"theorem={self.theorem}", f"M={self.M:g}"]
        parts += [f"{k}={getattr(self, k)}" for k in ("N", "m", "p") if getattr(self, k) is not None]
        if self.radius is not None:
            parts += [f"radius={self.radius:.6f}", f"residual={self.residual:.3e}"]
        parts.append(f"status={self.status}")
        return " ".join(parts)

    def csv_row(self) -> list[str]:
        out = []
        for key in RECORD_KEYS:
            value = getattr(self, key)
            if value is None:
                out.append("")
            elif key == "radius":
                out.append(f"{value:.6f}")
            elif key == "residual":
                out.append(f"{value:.3e}")
            else:
                out.append(str(value))
        return out


def _add_problem_flags(sub: argparse.ArgumentParser):
    sub.add_argument("--theorem", required=True, choices=[k.value for k in Kind])
    sub.add_argument("--N", type=int)
    sub.add_argument("--m", type=int)
    sub.add_argument("--p", type=int)


def _problem(args, M: float) -> RadiusProblem:
    try:
        return RadiusProblem(Kind(args.theorem), M, N=args.N, m=args.m, p=args.p)
    except InvalidProblem as exc:
        raise UsageError(str(exc)) from exc


def csv_text(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", newline="") as fh:
        fh.write(text)


def cmd_radius(args) -> int:
    problem = _problem(args, args.M)
    tol = RADIUS_TOL if args.tol is None else args.tol
    if not tol > 0:
        raise UsageError(f"--tol must be positive, got {tol}")
    result = smallest_root(radius_equation(problem), radius_tol=tol)
    record = OutputRecord.from_result(problem, result)
    if args.format == "json":
        print(json.dumps(asdict(record)))
    elif args.format == "csv":
        sys.stdout.write(csv_text([list(RECORD_KEYS), record.csv_row()]))
    else:
        print(record.text())
    if result.status is Status.NO_ROOT:
        print(result.message, file=sys.stderr)
        return EXIT_NO_ROOT
    if result.status is not Status.FOUND:
        print(result.message, file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def table_rows(table_id: int) -> list[list[str]]:
    layout = TABLES[table_id]
    rows = [["M"] + [f"{M:g}" for M in layout.M_values]]
    for N in layout.N_values:
        row = [f"r_{N}"]
        for M in layout.M_values:
            result = smallest_root(radius_equation(RadiusProblem(layout.kind, M, N=N)))
            row.append("" if result.radius is None else str(round3(result.radius)))
        rows.append(row)
    return rows


def cmd_table(args) -> int:
    _emit(csv_text(table_rows(args.id)), args.out)
    return EXIT_OK


def sweep_rows(problem: RadiusProblem, M_grid) -> list[list[str]]:
    rows = [["M", "radius", "residual", "status"]]
    for M in M_grid:
        result = smallest_root(radius_equation(problem.with_M(float(M))))
        found = result.radius is not None
        rows.append([
            f"{M:.12g}",
            f"{result.radius:.6f}" if found else "",
            f"{result.residual:.3e}" if found else "",
            result.status.value,
        ])
    return rows


def cmd_sweep(args) -> int:
    start, end, steps = args.m_start, args.m_end, args.steps
    if steps < 2:
        raise UsageError(f"--steps must be at least 2, got {steps}")
    if not 0 < start < end:
        raise UsageError(f"need 0 < --m-start < --m-end, got {start} and {end}")
    if end >= M_STAR and not args.allow_noroot:
        raise UsageError(
            f"--m-end {end} is not below M* = {M_STAR:.6f}; pass --allow-noroot to emit NoRoot rows"
        )
    problem = _problem(args, start)
    grid = np.linspace(start, end, steps)
    _emit(csv_text(sweep_rows(problem, grid)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.samples < 1:
        raise UsageError(f"--samples must be at least 1, got {args.samples}")
    problem = _problem(args, args.M)
    result = smallest_root(radius_equation(problem))
    if not result.found:
        print(f"{problem.label()}: {result.status.value} {result.message}")
        return EXIT_NO_ROOT if result.status is Status.NO_ROOT else EXIT_VERIFY
    target = radius_equation(problem).target
    enc = oracle.lhs_functional(problem, result.radius)
    sharp = oracle.verify_sharpness(problem, result, tol=args.tol)
    print(f"{problem.label()}: radius={result.radius:.12f} target={target:.12f}")
    print(f"  sharpness: enclosure [{enc.lower:.15g}, {enc.upper:.15g}] "
          f"width={enc.width:.3e} gap={enc.distance_outside(target):.3e} -> "
          f"{'ok' if sharp else 'FAIL'}")
    violations = oracle.inequality_violations(problem, result, args.samples)
    widths = [oracle.lhs_functional(problem, float(r)).width
              for r in oracle.sample_radii(result.radius, args.samples)]
    print(f"  below root: {args.samples} samples, max enclosure width={max(widths):.3e} -> "
          f"{'ok' if not violations else 'FAIL'}")
    for r, bad in violations:
        print(f"    r={r:.12f} enclosure [{bad.lower:.15g}, {bad.upper:.15g}] exceeds {target:.15g}")
    return EXIT_OK if sharp and not violations else EXIT_VERIFY


def parse_grid(spec: str) -> list[float]:
    try:
        start, stop, step = (float(part) for part in spec.split(":"))
    except ValueError as exc:
        raise UsageError(f"--grid must look like start:stop:step, got {spec!r}") from exc
    if not step > 0:
        raise UsageError(f"grid step must be positive, got {step}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1 if stop >= start else 0
    grid = [round(start + k * step, 12) for k in range(count)]
    if not grid:
        raise UsageError(f"grid {spec!r} is empty")
    if not all(0 < r < 1 for r in grid):
        raise UsageError(f"grid {spec!r} leaves (0, 1)")
    return grid


def cmd_check_forms(args) -> int:
    grid = parse_grid(args.grid)
    checks = list(oracle.closed_form_checks(grid, K=args.K))
    worst: dict[str, float] = {}
    failed = []
    for check in checks:
        worst[check.name] = max(worst.get(check.name, 0.0), check.enclosure.distance_outside(check.value))
        if not check.ok:
            failed.append(check)
    print(f"closed forms vs {args.K}-term enclosures on {len(grid)} radii")
    for name, gap in worst.items():
        print(f"  {name:<24} max distance outside enclosure {gap:.3e}")
    for check in failed:
        enc = check.enclosure
        print(f"  VIOLATION {check.name} r={check.r}: {check.value!r} "
              f"not in [{enc.lower!r}, {enc.upper!r}]")

    print("printed G(r) vs sum_{n>=2} r^(2n)/(n(n-1)^2):")
    print("  r        printed_G          series             difference")
    for r in grid:
        printed = oracle.printed_G(r)
        series = oracle.series_G(r, K=args.K).partial_sum
        flag = "  sign of log term differs" if abs(printed - series) > 1e-12 else ""
        print(f"  {r:<8.4g} {printed:<18.12g} {series:<18.12g} {printed - series:+.6e}{flag}")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bohrlab", description=__doc__.splitlines()[0], allow_abbrev=False)
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = subs.add_parser("radius", help="smallest root of one radius equation", allow_abbrev=False)
    _add_problem_flags(p)
    p.add_argument("--M", type=float, required=True)
    p.add_argument("--tol", type=float)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_radius)

    p = subs.add_parser("table", help="recompute a published radius table as CSV", allow_abbrev=False)
    p.add_argument("--id", type=int, required=True, choices=sorted(TABLES))
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = subs.add_parser("sweep", help="radius against M on a uniform grid, as CSV", allow_abbrev=False)
    _add_problem_flags(p)
    p.add_argument("--m-start", type=float, required=True)
    p.add_argument("--m-end", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--allow-noroot", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser("verify", help="sharpness and below-root checks for f_M", allow_abbrev=False)
    _add_problem_flags(p)
    p.add_argument("--M", type=float, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("check-forms", help="closed forms against certified series",
                        allow_abbrev=False)
    p.add_argument("--grid", default="0.05:0.95:0.05")
    p.add_argument("--K", type=int, default=oracle.K_DEFAULT)
    p.set_defaults(func=cmd_check_forms)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"bohrlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"bohrlab: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
