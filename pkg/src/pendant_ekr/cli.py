"""Command-line front end.

Exit codes: 0 success (EKR for ``verdict``), 1 not-EKR / failed checks /
conjecture violation, 2 bad input (parse errors, invalid parameters),
3 capacity or solver cap exceeded, 4 unknown strictness.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io as gio
from .checks import CheckResult, format_table, run_suite
from .compression import compress
from .errors import CapacityError, EkrError, GraphParseError, SolverCapError
from .families import independent_rsets, star_table
from .graphs import Graph, build_family, min_maximal_independent, pendant_closure
from .solver import DEFAULT_FAMILY_CAP, ekr_verdict, holroyd_talbot_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_UNKNOWN = 4

FAMILIES = [
    "empty", "path", "cycle", "complete",
    "pendant-empty", "pendant-path", "pendant-cycle", "pendant-complete",
]
REPORT_SCHEMA = Path(__file__).parent / "schemas" / "report.schema.json"


def family_graph(name: str, n: int) -> Graph:
    if name.startswith("pendant-"):
        return pendant_closure(build_family(name[len("pendant-"):], n))
    return build_family(name, n)


def _add_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--family", choices=FAMILIES, help="named graph family")
    src.add_argument("--graph", type=Path, help="graph file ('n m' header, edge lines, optional pairs line)")
    p.add_argument("--n", type=int, help="base order for --family")


def _load(args: argparse.Namespace) -> Graph:
    if args.graph is not None:
        return gio.read_graph(args.graph)
    if args.n is None:
        raise EkrError("--family requires --n")
    return family_graph(args.family, args.n)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text)


def cmd_enumerate(args: argparse.Namespace) -> int:
    g = _load(args)
    fam = independent_rsets(g, args.r)
    if args.out is not None:
        args.out.write_text(gio.family_to_json(fam) + "\n")
    print(len(fam))
    return EXIT_OK


def cmd_star_table(args: argparse.Namespace) -> int:
    g = _load(args)
    _emit(gio.star_table_csv(g, star_table(g, args.r)), args.out)
    return EXIT_OK


def cmd_compress(args: argparse.Namespace) -> int:
    g = family_graph("pendant-complete", args.n)
    if args.input is not None:
        fam = gio.family_from_json(g, args.input.read_text())
    else:
        from .checks import random_intersecting_family

        fam = random_intersecting_family(g, args.r, random.Random(args.seed))
    trace = compress(fam)
    _emit(json.dumps(gio.trace_to_dict(trace), indent=2), args.out)
    return EXIT_OK


def cmd_verdict(args: argparse.Namespace) -> int:
    g = _load(args)
    v = ekr_verdict(g, args.r, strictness=args.strict, family_cap=args.family_cap)
    _emit(json.dumps(gio.verdict_to_dict(v), indent=2), args.out)
    if v.verdict == "not-EKR":
        return EXIT_FAIL
    if v.verdict == "unknown-strictness":
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        g = family_graph(args.family, n)
        r_max = args.r_max if args.r_max is not None else n
        for row in holroyd_talbot_report(g, r_max, strictness=args.strict):
            rows.append((g.name, row))
    _emit(gio.sweep_csv(rows), args.out)
    return EXIT_FAIL if any(row.violation for _, row in rows) else EXIT_OK


def _graph_checks(g: Graph) -> list[CheckResult]:
    """No Holroyd-Talbot violation for r <= mu/2 on a user-supplied graph."""
    out = []
    for row in holroyd_talbot_report(g, min_maximal_independent(g) // 2):
        actual = row.verdict.verdict if row.verdict is not None else row.error
        out.append(CheckResult("graph-ht", {"graph": g.name or "file", "r": row.r}, "EKR", actual,
                               row.verdict is not None and row.verdict.is_ekr))
    return out


def cmd_verify_paper(args: argparse.Namespace) -> int:
    extra = [gio.read_graph(p) for p in args.graph or []]
    results, timings = run_suite(args.max_n, args.seed)
    for g in extra:
        results.extend(_graph_checks(g))
    ok = all(r.passed for r in results)
    report = {
        "schema_version": 1,
        "max_n": args.max_n,
        "seed": args.seed,
        "all_passed": ok,
        "results": [r.to_dict() for r in results],
    }
    if args.out is not None:
        args.out.write_text(json.dumps(report, indent=1) + "\n")
    print(format_table(results, timings))
    print("ALL PASS" if ok else "FAILURES PRESENT")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pendant-ekr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="count (and export) independent r-sets")
    _add_source(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", type=Path, help="write the family as JSON")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("star-table", help="CSV of r-star sizes per vertex")
    _add_source(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_star_table)

    p = sub.add_parser("compress", help="compress an intersecting family on K_n*")
    p.add_argument("--n", type=int, required=True, help="order of the complete base graph")
    p.add_argument("--input", type=Path, help="family JSON (lists of vertex indices)")
    p.add_argument("--r", type=int, default=2, help="set size for a random family")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, help="write the trace JSON here")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("verdict", help="exact EKR verdict for one r")
    _add_source(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="enumerate all maximum families")
    p.add_argument("--family-cap", type=int, default=DEFAULT_FAMILY_CAP,
                   help="maximum families examined before reporting unknown strictness")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_verdict)

    p = sub.add_parser("sweep", help="verdict CSV over a range of n for a family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--r-max", type=int, help="default: n")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify-paper", help="run every named check")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, help="write the JSON report here")
    p.add_argument("--graph", type=Path, action="append", help="extra graph file to check (repeatable)")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CapacityError, SolverCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (EkrError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
