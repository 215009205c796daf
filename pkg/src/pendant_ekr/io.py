"""Graph text files and JSON/CSV export of families, traces, star tables and verdicts.

Graph format::

    n m
    u v          (m lines, 0-based, u < v in canonical files)
    pairs 0:3,1:4,2:5   (optional pendant metadata)
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, Union

from .compression import CompressionTrace
from .errors import CapacityError, EkrError, GraphParseError
from .families import SetFamily, StarTable
from .graphs import MAX_VERTICES, Graph, from_edges, members
from .solver import EkrVerdict, HTRow

PathLike = Union[str, Path]


def format_graph(g: Graph) -> str:
    lines = [f"{g.n_vertices} {g.n_edges}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    if g.pendant_pairs is not None:
        lines.append("pairs " + ",".join(f"{b}:{p}" for b, p in g.pendant_pairs))
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    """Parse the graph text format; errors carry the 1-based line number."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphParseError("missing header 'n m'", 1)
    header = lines[0].split()
    if len(header) != 2:
        raise GraphParseError("header must be 'n m'", 1)
    n, m = _ints(header, 1)
    if n < 0 or m < 0:
        raise GraphParseError("n and m must be non-negative", 1)
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceed capacity {MAX_VERTICES}")
    edges = []
    seen = set()
    for k in range(m):
        lineno = k + 2
        if lineno > len(lines):
            raise GraphParseError(f"expected {m} edge lines, file ended", lineno)
        tokens = lines[lineno - 1].split()
        if len(tokens) != 2:
            raise GraphParseError("edge line must be 'u v'", lineno)
        u, v = _ints(tokens, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"edge ({u}, {v}) out of range for {n} vertices", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append((u, v))
    pairs = None
    rest = [(i + 1, line) for i, line in enumerate(lines) if i >= m + 1 and line.strip()]
    if rest:
        lineno, line = rest[0]
        if len(rest) > 1 or not line.startswith("pairs"):
            raise GraphParseError("unexpected trailing content", lineno)
        body = line[len("pairs"):].strip()
        pairs = []
        for item in filter(None, body.split(",")):
            parts = item.split(":")
            if len(parts) != 2:
                raise GraphParseError(f"bad pair {item!r}", lineno)
            pairs.append(tuple(_ints(parts, lineno)))
    try:
        return from_edges(n, edges, pairs)
    except CapacityError:
        raise
    except EkrError as exc:
        raise GraphParseError(str(exc), len(lines)) from None


def read_graph(path: PathLike) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_graph(g))


def family_to_json(f: SetFamily) -> str:
    return json.dumps(f.as_lists())


def family_from_json(g: Graph, text: str) -> SetFamily:
    raw = json.loads(text)
    sets = [sum(1 << v for v in member) for member in raw]
    r = len(raw[0]) if raw else 0
    return SetFamily.of(g, r, sets)


def trace_to_dict(trace: CompressionTrace) -> dict:
    return {
        "input": trace.input_family.as_lists(),
        "output": trace.output_family.as_lists(),
        "steps": [{"step": m.step, "before": members(m.before), "after": members(m.after)} for m in trace.moved],
    }


def star_table_csv(g: Graph, table: StarTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["vertex_label", "size", "is_argmax"])
    for v, size in table.sizes.items():
        w.writerow([g.label(v), size, str(v in table.argmax_vertices).lower()])
    return buf.getvalue()


def verdict_to_dict(v: EkrVerdict) -> dict:
    return {
        "graph": v.graph,
        "n": v.n_vertices,
        "r": v.r,
        "mu": v.mu,
        "max_star": v.max_star_size,
        "max_intersecting": v.max_intersecting_size,
        "verdict": v.verdict,
        "ht_applicable": v.ht_applicable,
        "witness": v.witness.as_lists(),
    }


SWEEP_COLUMNS = ["graph", "n", "r", "mu", "max_star", "max_intersecting", "verdict", "ht_applicable", "violation", "error"]


def sweep_csv(rows: Iterable[tuple[str, HTRow]]) -> str:
    """CSV summary; each row pairs a graph name with one report row."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for name, row in rows:
        v = row.verdict
        if v is None:
            w.writerow([name, "", row.r, "", "", "", "", str(row.ht_applicable).lower(), "false", row.error])
        else:
            w.writerow([
                name, v.n_vertices, v.r, v.mu, v.max_star_size, v.max_intersecting_size, v.verdict,
                str(v.ht_applicable).lower(), str(row.violation).lower(), "",
            ])
    return buf.getvalue()
