"""Command-line entry point ``geomharm``.

Subcommands: ``table``, ``verify``, ``eval``, ``bench``, ``explore``.
Exit codes: 0 success, 1 identity failure or value mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .exact_core import (
    SeqTable,
    bernoulli,
    genocchi,
    harmonic,
    poly_bernoulli,
    stirling1_unsigned,
    stirling2,
)
from .geometric import geometric
from .harmonic_geometric import hgp
from .integrals import explore_eq13_odd, explore_hgp_semiorth
from .polynomials import format_rational, parse_rational, to_text
from .series_eval import A_fin, A_inf, direct_sum, hA_fin, hA_inf
from .verification import SUITES, reports_to_json, run_suite

SEQUENCES = (
    "stirling2",
    "stirling1",
    "harmonic",
    "bernoulli",
    "genocchi",
    "ordered_bell",
    "gp_coeffs",
    "hgp_coeffs",
    "poly_bernoulli",
)
OPEN_PROBLEM_LABEL = "open problem - no asserted closed form"


class UsageError(Exception):
    pass


def _fmt(v) -> str:
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return " ".join(_fmt(e) for e in v)
    return to_text(v)


def build_table(name: str, n_max: int, q: int = 2) -> SeqTable:
    rng = range(n_max + 1)
    if name == "stirling2":
        values = [[stirling2(n, k) for k in range(n + 1)] for n in rng]
    elif name == "stirling1":
        values = [[stirling1_unsigned(n, k) for k in range(n + 1)] for n in rng]
    elif name == "harmonic":
        values = [harmonic(n) for n in rng]
    elif name == "bernoulli":
        values = [bernoulli(n) for n in rng]
    elif name == "genocchi":
        return SeqTable(name, 1, tuple(genocchi(n) for n in range(1, max(n_max, 1) + 1)))
    elif name == "ordered_bell":
        values = [geometric(n)(1) for n in rng]
    elif name == "gp_coeffs":
        values = [geometric(n) for n in rng]
    elif name == "hgp_coeffs":
        values = [hgp(n) for n in rng]
    elif name == "poly_bernoulli":
        values = [poly_bernoulli(n, q) for n in rng]
    else:
        raise UsageError(f"unknown sequence {name!r}")
    return SeqTable(name, 0, tuple(values))


def _json_value(v):
    if isinstance(v, list):
        return [_json_value(e) for e in v]
    return _fmt(v)


def render_table(table: SeqTable, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {"name": table.name, "offset": table.offset, "values": [_json_value(v) for v in table.values]},
            indent=2,
        )
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        triangle = isinstance(table.values[0], list)
        writer.writerow(["n", "k", "value"] if triangle else ["n", "value"])
        for i, v in enumerate(table.values, start=table.offset):
            if triangle:
                writer.writerows([i, k, _fmt(e)] for k, e in enumerate(v))
            else:
                writer.writerow([i, _fmt(v)])
        return buf.getvalue().rstrip("\n")
    return "\n".join(_fmt(v) for v in table.values)


def cmd_table(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    print(render_table(build_table(args.seq, args.n, args.q), args.format))
    return 0


def cmd_verify(args) -> int:
    if args.max_n < 2:
        raise UsageError("--max-n must be >= 2")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    reports = run_suite(args.suite, args.max_n, args.jobs)
    failed = [r for r in reports if not r.passed]
    if args.format == "json":
        print(reports_to_json(reports))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity_id", "params", "status", "lhs", "rhs", "elapsed"])
        for r in reports:
            writer.writerow([r.identity_id, r.params_text(), r.status, r.lhs, r.rhs, f"{r.elapsed:.6f}"])
        print(buf.getvalue(), end="")
    else:
        for r in reports:
            if r.passed and args.failures_only:
                continue
            line = f"{r.status.upper():4} {r.identity_id} ({r.params_text()})"
            if not r.passed:
                line += f"\n     lhs: {r.lhs}\n     rhs: {r.rhs}"
            print(line)
        print(f"{len(reports) - len(failed)}/{len(reports)} instances pass")
    return 1 if failed else 0


def cmd_eval(args) -> int:
    x = parse_rational(args.x)
    if args.m < 0:
        raise UsageError("--m must be >= 0")
    if args.series == "A":
        value = A_inf(args.m, x) if args.p is None else A_fin(args.m, args.p, x)
    else:
        if args.p is None:
            value = hA_inf(args.m, x)
        else:
            if args.p < 1:
                raise UsageError("--p must be >= 1 for hA")
            value = hA_fin(args.m, args.p, x)
    text = str(value) if not isinstance(value, Fraction) else format_rational(value)
    print(text)
    if args.numeric:
        print(repr(float(value)))
    return 0


def _time(fn, reps: int):
    t0 = time.perf_counter()
    for _ in range(reps):
        value = fn()
    return value, (time.perf_counter() - t0) / reps


def cmd_bench(args) -> int:
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    x = parse_rational(args.x)
    if not -1 < x < 1 or x == 0:
        raise UsageError("--x must satisfy 0 < |x| < 1")
    try:
        p_list = [int(s) for s in args.p.split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --p list: {exc}") from None
    if not p_list or min(p_list) < 1:
        raise UsageError("--p entries must be >= 1")
    rows = []
    mismatch = False
    for series in ("A", "hA"):
        closed = A_fin if series == "A" else hA_fin
        for m in range(args.m + 1):
            for p in p_list:
                cv, ct = _time(lambda: closed(m, p, x), args.reps)
                dv, dt = _time(lambda: direct_sum(m, p, x, with_harmonic=series == "hA"), args.reps)
                equal = cv == dv
                mismatch |= not equal
                rows.append((series, m, p, ct, dt, equal))
    header = ["series", "m", "p", "closed_s", "direct_s", "equal"]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows([s, m, p, f"{ct:.6f}", f"{dt:.6f}", eq] for s, m, p, ct, dt, eq in rows)
        print(buf.getvalue(), end="")
    elif args.format == "json":
        print(json.dumps([dict(zip(header, row)) for row in rows], indent=2))
    else:
        print(f"{'series':6} {'m':>3} {'p':>7} {'closed_s':>10} {'direct_s':>10} equal")
        for s, m, p, ct, dt, eq in rows:
            print(f"{s:6} {m:>3} {p:>7} {ct:>10.5f} {dt:>10.5f} {eq}")
    return 1 if mismatch else 0


def cmd_explore(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    rows = []
    for n in range(args.max_n + 1):
        for m in range(1, args.max_n + 1):
            if args.family == "eq13_odd":
                if (n + m) % 2:
                    rows.append((n, m, explore_eq13_odd(n, m)))
            elif n >= 1:
                rows.append((n, m, explore_hgp_semiorth(n, m)))
    if args.format == "json":
        print(json.dumps(
            {"family": args.family, "label": OPEN_PROBLEM_LABEL,
             "values": [{"n": n, "m": m, "value": format_rational(v)} for n, m, v in rows]},
            indent=2,
        ))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "m", "value"])
        writer.writerows([n, m, format_rational(v)] for n, m, v in rows)
        print(buf.getvalue(), end="")
    else:
        print(f"# {args.family}: {OPEN_PROBLEM_LABEL}")
        for n, m, v in rows:
            print(f"n={n} m={m} {format_rational(v)}")
    return 0


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("GEOMHARM_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geomharm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("table", help="emit a sequence table")
    p.add_argument("seq", choices=SEQUENCES)
    p.add_argument("--n", type=int, default=10, help="largest index")
    p.add_argument("--q", type=int, default=2, help="order for poly_bernoulli")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check identity suites exactly")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--failures-only", action="store_true")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="evaluate A or hA series exactly")
    p.add_argument("series", choices=("A", "hA"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", required=True, help='rational "p/q" with |x| < 1')
    p.add_argument("--p", type=int, default=None, help="upper summation limit (finite sum)")
    p.add_argument("--numeric", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("bench", help="time closed forms against term-by-term sums")
    p.add_argument("--m", type=int, default=4, help="largest power m")
    p.add_argument("--p", default="100,1000", help="comma-separated upper limits")
    p.add_argument("--x", default="1/3")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("explore", help="tabulate integrals with no known closed form")
    p.add_argument("family", choices=("eq13_odd", "hgp_semiorth"))
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, DomainError, ValueError, ZeroDivisionError) as exc:
        print(f"geomharm: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
