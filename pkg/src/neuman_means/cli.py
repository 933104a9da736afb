"""Command line front end: ``eval``, ``bounds``, ``verify`` and ``table``.

Exit codes: 0 success, 1 verification violations, 2 usage or domain error.
JSON output keeps a fixed key order and carries ``schema_version``; CSV
numbers are written with 17 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import __version__
from .bounds import BoundFamily, bound_envelope, linear_envelope, linear_reference_bounds, sharp_parameters
from .errors import DomainError
from .means import MeanKind, MeanPair, NeumanKind, classical_mean, neuman_mean, schwab_borchardt
from .verify import SUITES, GridSpec, run_suites

SCHEMA_VERSION = 1
EVAL_KINDS = ("G", "A", "Q", "SB", "GA", "AG", "QA", "AQ")
FORMATS = ("human", "json", "csv")


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _real(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    return x


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _cell(c):
    if isinstance(c, (bool, np.bool_)):
        return "true" if c else "false"
    if isinstance(c, (float, np.floating)):
        return _num(c)
    return "" if c is None else c


def _dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(c) for c in row])
    return buf.getvalue()


def _dump_human(record: dict) -> str:
    width = max(len(k) for k in record)
    lines = []
    for k, val in record.items():
        if isinstance(val, float):
            val = _num(val)
        lines.append(f"{k.ljust(width)}  {val}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------


def cmd_eval(args) -> tuple[str, int]:
    pair = MeanPair(args.a, args.b)
    if args.kind in ("G", "A", "Q"):
        value = classical_mean(MeanKind(args.kind), pair)
    elif args.kind == "SB":
        value = schwab_borchardt(pair.a, pair.b)
    else:
        value = neuman_mean(NeumanKind(args.kind), pair)
    record = {"kind": args.kind, "a": pair.a, "b": pair.b, "value": value}
    if args.format == "json":
        return _dump_json({"schema_version": SCHEMA_VERSION, **record}), 0
    if args.format == "csv":
        return _dump_csv(list(record), [list(record.values())]), 0
    return _num(value) + "\n", 0


def _bounds_record(kind: NeumanKind, family: BoundFamily, pair: MeanPair) -> dict:
    params = sharp_parameters(kind, family)
    env = bound_envelope(kind, family, pair)
    n = neuman_mean(kind, pair)
    return {
        "kind": kind.value,
        "family": family.value,
        "a": pair.a,
        "b": pair.b,
        "alpha": params.alpha,
        "beta": params.beta,
        "alpha_symbolic": params.alpha_symbolic,
        "beta_symbolic": params.beta_symbolic,
        "alpha_degenerate": params.degenerate["alpha"],
        "beta_degenerate": params.degenerate["beta"],
        "lower": env.lower,
        "upper": env.upper,
        "neuman_value": n,
        "margin_lower": (n - env.lower) / n,
        "margin_upper": (env.upper - n) / n,
        "contains": env.contains(n),
    }


def cmd_bounds(args) -> tuple[str, int]:
    record = _bounds_record(NeumanKind(args.kind), BoundFamily(args.family), MeanPair(args.a, args.b))
    if args.format == "json":
        return _dump_json({"schema_version": SCHEMA_VERSION, **record}), 0
    if args.format == "csv":
        return _dump_csv(list(record), [list(record.values())]), 0
    return _dump_human(record), 0


_REPORT_COLUMNS = ("suite", "passed", "checks_run", "violations", "min_margin", "boundary_flags", "seed", "label")


def cmd_verify(args) -> tuple[str, int]:
    grid = GridSpec(count=args.grid_count)
    reports = run_suites(
        args.suite,
        samples=args.samples,
        seed=args.seed,
        grid=grid,
        grid_points=args.grid_points,
        n_max=args.n_max,
    )
    passed = all(r.passed for r in reports)
    code = 0 if passed else 1
    dicts = [r.to_dict() for r in reports]
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "suite": args.suite,
            "passed": passed,
            "checks_run": sum(r.checks_run for r in reports),
            "violations": sum(r.violations for r in reports),
            "reports": dicts,
        }
        return _dump_json(doc), code
    rows = [[d[c] for c in _REPORT_COLUMNS] for d in dicts]
    if args.format == "csv":
        return _dump_csv(_REPORT_COLUMNS, rows), code
    lines = []
    for d in dicts:
        status = "PASS" if d["passed"] else "FAIL"
        margin = "n/a" if d["min_margin"] is None else f"{d['min_margin']:.3e}"
        lines.append(
            f"{status}  {d['suite']:<22} checks={d['checks_run']:<8} violations={d['violations']:<6}"
            f" boundary={d['boundary_flags']:<6} min_margin={margin}  ({d['label']})"
        )
    lines.append(f"{'PASS' if passed else 'FAIL'}  overall")
    return "\n".join(lines) + "\n", code


TABLE_COLUMNS = (
    "v",
    "N",
    "power_lo",
    "power_hi",
    "harm_lo",
    "harm_hi",
    "linear_lo",
    "linear_hi",
    "power_width",
    "harm_width",
    "linear_width",
)


def tightness_table(kind: NeumanKind | str, grid: GridSpec, raw: bool = False) -> list[list[float]]:
    """Rows of :data:`TABLE_COLUMNS` comparing sharp and linear reference bounds.

    By default each row is the pair with arithmetic mean 1; with ``raw`` it is
    ``((1+v)/(1-v), 1)``.  Widths are ``(hi - lo) / N``.
    """
    kind = NeumanKind(kind)
    v = grid.points()
    pair = MeanPair((1 + v) / (1 - v), np.ones_like(v)) if raw else MeanPair.from_v(v)
    n = np.asarray(neuman_mean(kind, pair))
    p = bound_envelope(kind, BoundFamily.POWER, pair)
    h = bound_envelope(kind, BoundFamily.HARMONIC, pair)
    lin = linear_envelope(kind, pair)
    cols = [v, n, p.lower, p.upper, h.lower, h.upper, lin.lower, lin.upper]
    cols += [(p.upper - p.lower) / n, (h.upper - h.lower) / n, (lin.upper - lin.lower) / n]
    return [[float(c[i]) for c in cols] for i in range(v.size)]


def cmd_table(args) -> tuple[str, int]:
    grid = GridSpec(args.v_min, args.v_max, args.count, args.spacing)
    kind = NeumanKind(args.kind)
    rows = tightness_table(kind, grid, raw=args.raw)
    if args.format == "csv":
        return _dump_csv(TABLE_COLUMNS, rows), 0
    if args.format == "json":
        ref = linear_reference_bounds(kind)
        doc = {
            "schema_version": SCHEMA_VERSION,
            "kind": kind.value,
            "normalization": "raw" if args.raw else "A=1",
            "grid": grid.describe(),
            "constants": {
                family.value: {
                    "alpha": sharp_parameters(kind, family).alpha_symbolic,
                    "beta": sharp_parameters(kind, family).beta_symbolic,
                }
                for family in BoundFamily
            }
            | {"linear": {"alpha": ref.alpha_symbolic, "beta": ref.beta_symbolic}},
            "columns": list(TABLE_COLUMNS),
            "rows": rows,
        }
        return _dump_json(doc), 0
    out = ["  ".join(f"{c:>12}" for c in TABLE_COLUMNS)]
    out += ["  ".join(f"{x:12.6g}" for x in row) for row in rows]
    return "\n".join(out) + "\n", 0


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="neuman-means", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default="human"):
        p.add_argument("--format", choices=FORMATS, default=default)

    p = sub.add_parser("eval", help="evaluate one mean")
    p.add_argument("--kind", required=True, choices=EVAL_KINDS)
    p.add_argument("-a", type=_real, required=True)
    p.add_argument("-b", type=_real, required=True)
    fmt(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("bounds", help="sharp bounds around a Neuman mean")
    p.add_argument("--kind", required=True, choices=[k.value for k in NeumanKind])
    p.add_argument("--family", required=True, choices=[f.value for f in BoundFamily])
    p.add_argument("-a", type=_real, required=True)
    p.add_argument("-b", type=_real, required=True)
    fmt(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--grid-count", type=int, default=10_000)
    p.add_argument("--grid-points", type=int, default=10_000)
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tightness table of sharp vs linear bounds")
    p.add_argument("--kind", required=True, choices=[k.value for k in NeumanKind])
    p.add_argument("--v-min", type=float, default=0.1)
    p.add_argument("--v-max", type=float, default=0.9)
    p.add_argument("--count", type=int, default=9)
    p.add_argument("--spacing", choices=("linear", "log-endpoints"), default="linear")
    p.add_argument("--raw", action="store_true", help="use b = 1 instead of scaling to A = 1")
    fmt(p, "csv")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return exc.code if isinstance(exc.code, int) else 2
    try:
        text, code = args.func(args)
    except DomainError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    stdout.write(text)
    return code
