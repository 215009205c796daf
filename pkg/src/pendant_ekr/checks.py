"""Named verification checks, one ``CheckResult`` per checked instance.

``run_suite(max_n=8)`` runs every check over its full default range; a
smaller ``max_n`` shrinks each range proportionally.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterator

from .closed_forms import (
    argmax_star_product,
    binet,
    check_path_recurrence,
    count_kstar_formula,
    fib,
    full_path_count,
    star_kstar_formula,
    star_product,
)
from .compression import compress, meets_only_in_base, partition_pxr
from .families import (
    SetFamily,
    count_independent_rsets,
    independent_rsets,
    is_intersecting,
    star,
    star_table,
)
from .graphs import Graph, delete_closed_neighborhood, from_edges, pendant_closure, pendant_family
from .solver import ekr_verdict, beats_star_family, max_clique_size, intersection_graph, naive_max_intersecting

REFERENCE_MAX_N = 8
COMPRESSION_TRIALS = 500
ORACLE_INSTANCES = 50
ORACLE_MAX_SETS = 20


@dataclass
class CheckResult:
    check_id: str
    parameters: dict[str, Any]
    expected: Any
    actual: Any
    passed: bool
    runtime_ms: int = 0
    comparison: str = "eq"

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def _compare(expected: Any, actual: Any, comparison: str) -> bool:
    if comparison == "eq":
        return expected == actual
    if comparison == "le":
        return actual <= expected
    if comparison == "subset":
        return set(expected) <= set(actual)
    raise ValueError(f"unknown comparison {comparison!r}")


def _result(check_id: str, params: dict, expected: Any, actual: Any, comparison: str = "eq") -> CheckResult:
    return CheckResult(check_id, params, expected, actual, _compare(expected, actual, comparison), 0, comparison)


def _scaled(nominal: int, max_n: int) -> int:
    return nominal * max_n // REFERENCE_MAX_N


def random_intersecting_family(g: Graph, r: int, rng: random.Random) -> SetFamily:
    """A random nonempty intersecting subfamily of I^(r)(g), by one of two recipes:
    a random part of a random star extended greedily, or a shuffled greedy build
    truncated at a random size."""
    pool = list(independent_rsets(g, r).sets)
    if not pool:
        return SetFamily(g, r, ())
    rng.shuffle(pool)
    chosen: list[int] = []
    if rng.random() < 0.4:
        centre = rng.randrange(g.n_vertices)
        in_star = [s for s in pool if s >> centre & 1]
        chosen = [s for s in in_star if rng.random() < 0.7]
    target = rng.randint(1, len(pool))
    for s in pool:
        if len(chosen) >= target:
            break
        if s not in chosen and all(s & c for c in chosen):
            chosen.append(s)
    if not chosen:
        chosen = [pool[0]]
    return SetFamily.of(g, r, chosen)


def check_complete_counts(max_n: int) -> Iterator[CheckResult]:
    for n in range(1, _scaled(8, max_n) + 1):
        g = pendant_family("complete", n)
        for r in range(1, n + 2):
            yield _result("lemma1", {"n": n, "r": r}, count_kstar_formula(n, r), count_independent_rsets(g, r))


def check_complete_stars(max_n: int) -> Iterator[CheckResult]:
    for n in range(1, _scaled(8, max_n) + 1):
        g = pendant_family("complete", n)
        for r in range(1, n + 1):
            expected = star_kstar_formula(n, r)
            for i in range(n):
                p = n + i
                params = {"n": n, "r": r, "pendant": g.label(p)}
                yield _result("lemma2", params, expected, len(star(g, p, r)))
                down, _ = delete_closed_neighborhood(g, p)
                yield _result("lemma2-bijection", params, expected, count_independent_rsets(down, r - 1))


def check_compression(max_n: int, seed: int = 0) -> Iterator[CheckResult]:
    """Randomized compression trials on K_n* plus the partition bounds derived from them."""
    top = max(1, _scaled(5, max_n))
    rng = random.Random(seed)
    for trial in range(COMPRESSION_TRIALS):
        n = rng.randint(1, top)
        r = rng.randint(1, n)
        g = pendant_family("complete", n)
        f = random_intersecting_family(g, r, rng)
        out = compress(f).output_family
        failures = []
        if len(out) != len(f):
            failures.append("size")
        if not all(g.is_independent(s) and s.bit_count() == r for s in out):
            failures.append("independence")
        if not is_intersecting(out):
            failures.append("intersecting")
        if meets_only_in_base(out):
            failures.append("base-only-meet")
        params = {"trial": trial, "n": n, "r": r, "size": len(f), "seed": seed}
        yield _result("lemma3", params, [], failures)

        part = partition_pxr(out)
        bound_failures = []
        if len(part.pendant_only) + len(part.with_base) != len(out):
            bound_failures.append("partition")
        if len(part.with_base) > (n - r + 1) * len(part.residues):
            bound_failures.append("X<=(n-r+1)R")
        if r >= 2 and not is_intersecting(part.residues):
            bound_failures.append("R-intersecting")
        if r >= 2 and n >= 2 * (r - 1) and len(part.residues) > math.comb(n - 1, r - 2):
            bound_failures.append("R-bound")
        if n >= 2 * r and len(f) > star_kstar_formula(n, r):
            bound_failures.append("family-bound")
        yield _result("thm5-partition", params, [], bound_failures)


COMPLETE_INSTANCES = ((4, 2), (5, 2), (6, 2), (6, 3))


def check_complete_maximum(max_n: int) -> Iterator[CheckResult]:
    limit = _scaled(6, max_n)
    for n, r in COMPLETE_INSTANCES:
        if n > limit:
            continue
        strict = n > 2 * r
        v = ekr_verdict(pendant_family("complete", n), r, strictness=strict)
        params = {"n": n, "r": r}
        yield _result("thm5", params, star_kstar_formula(n, r), v.max_intersecting_size)
        if strict:
            yield _result("thm5-strict", params, "strictly-EKR", v.verdict)


def check_recurrence(max_n: int) -> Iterator[CheckResult]:
    for n in range(3, _scaled(9, max_n) + 1):
        for r in range(1, n + 1):
            for i in range(1, n + 1):
                rep = check_path_recurrence(n, r, i)
                if not rep.applicable:
                    continue
                params = {"n": n, "r": r, "i": i, "form": rep.form}
                yield _result("lemma4", params, rep.lhs, rep.rhs)


def check_base_vs_pendant(max_n: int) -> Iterator[CheckResult]:
    for n in range(1, _scaled(9, max_n) + 1):
        g = pendant_family("path", n)
        for r in range(1, n + 1):
            table = star_table(g, r)
            for i in range(n):
                params = {"n": n, "r": r, "i": i + 1}
                yield _result("lemma8", params, table.sizes[n + i], table.sizes[i], "le")


def check_path_counts(max_n: int) -> Iterator[CheckResult]:
    for n in range(0, _scaled(14, max_n) + 1):
        yield _result("lemma9", {"n": n}, fib(n), full_path_count(n))


def check_path_stars(max_n: int) -> Iterator[CheckResult]:
    for n in range(1, _scaled(12, max_n) + 1):
        table = star_table(pendant_family("path", n), n)
        for k in range(1, n + 1):
            yield _result("lemma10", {"n": n, "k": k}, star_product(n, k), table.sizes[n + k - 1])


def check_path_argmax(max_n: int) -> Iterator[CheckResult]:
    for n in range(2, _scaled(10, max_n) + 1):
        g = pendant_family("path", n)
        expected = sorted({g.label(n + 1), g.label(2 * n - 2)})
        for r in range(1, n + 1):
            table = star_table(g, r)
            actual = sorted(g.label(v) for v in table.argmax_vertices)
            yield _result("thm6", {"n": n, "r": r}, expected, actual, "subset")


def check_product_argmax(max_n: int) -> Iterator[CheckResult]:
    for n in range(2, _scaled(60, max_n) + 1):
        yield _result("lemma11", {"n": n}, sorted({2, n - 1}), sorted(argmax_star_product(n)), "subset")


def check_binet(max_n: int) -> Iterator[CheckResult]:
    for n in range(2, _scaled(40, max_n) + 1):
        exact = fib(n - 2)
        ok = abs(binet(n) - exact) < 1e-6 and abs(binet(n) - exact) / exact < 1e-6
        yield CheckResult("binet", {"n": n}, exact, binet(n), ok, 0, "abs<1e-6")


def check_beats_star(max_n: int) -> Iterator[CheckResult]:
    for n in range(4, _scaled(7, max_n) + 1):
        fam = beats_star_family(n)
        params = {"n": n}
        yield _result("lemma13-family", params, [fib(n) - 1, True], [len(fam), is_intersecting(fam)])
        v = ekr_verdict(pendant_family("path", n), n)
        yield _result("lemma13-max", params, fib(n) - 1, v.max_intersecting_size)
        yield _result("lemma13-star", params, 2 * fib(n - 2), v.max_star_size)
        yield _result("lemma13-verdict", params, "not-EKR", v.verdict)


def random_oracle_instance(rng: random.Random) -> tuple[Graph, int, list[int]]:
    """A random small graph (optionally a pendant closure) and r with 1..20 candidate sets."""
    while True:
        n = rng.randint(2, 7)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = from_edges(n, edges)
        if rng.random() < 0.4 and n <= 5:
            g = pendant_closure(g)
        r = rng.randint(1, 4)
        sets = list(independent_rsets(g, r).sets)
        if 1 <= len(sets) <= ORACLE_MAX_SETS:
            return g, r, sets


def check_solver_oracle(max_n: int, seed: int = 0) -> Iterator[CheckResult]:
    rng = random.Random(seed)
    for k in range(ORACLE_INSTANCES):
        g, r, sets = random_oracle_instance(rng)
        params = {"instance": k, "n_vertices": g.n_vertices, "r": r, "n_sets": len(sets), "seed": seed}
        yield _result("solver-oracle", params, naive_max_intersecting(sets), max_clique_size(intersection_graph(sets)))


CHECKS: dict[str, Callable[..., Iterator[CheckResult]]] = {
    "binet": check_binet,
    "lemma1": check_complete_counts,
    "lemma2": check_complete_stars,
    "lemma3": check_compression,
    "lemma4": check_recurrence,
    "lemma8": check_base_vs_pendant,
    "lemma9": check_path_counts,
    "lemma10": check_path_stars,
    "lemma11": check_product_argmax,
    "lemma13": check_beats_star,
    "solver-oracle": check_solver_oracle,
    "thm5": check_complete_maximum,
    "thm6": check_path_argmax,
}
SEEDED = {"lemma3", "solver-oracle"}


def run_check(name: str, max_n: int = REFERENCE_MAX_N, seed: int = 0) -> list[CheckResult]:
    fn = CHECKS[name]
    kwargs = {"seed": seed} if name in SEEDED else {}
    out = []
    gen = fn(max_n, **kwargs)
    while True:
        start = time.perf_counter()
        try:
            res = next(gen)
        except StopIteration:
            break
        except Exception as exc:  # a crashing check is a failed check, never an aborted run
            out.append(CheckResult(name, {}, "no error", f"{type(exc).__name__}: {exc}", False))
            break
        res.runtime_ms = int((time.perf_counter() - start) * 1000)
        out.append(res)
    return out


def run_suite(
    max_n: int = REFERENCE_MAX_N, seed: int = 0, only: list[str] | None = None
) -> tuple[list[CheckResult], dict[str, float]]:
    """Run the named checks; returns results ordered by check id and wall time per check."""
    results: list[CheckResult] = []
    timings: dict[str, float] = {}
    for name in sorted(only or CHECKS):
        start = time.perf_counter()
        results.extend(run_check(name, max_n, seed))
        timings[name] = time.perf_counter() - start
    results.sort(key=lambda c: c.check_id)
    return results, timings


@dataclass
class Summary:
    check_id: str
    instances: int = 0
    passed: int = 0
    failures: list[CheckResult] = field(default_factory=list)


def summarize(results: list[CheckResult]) -> list[Summary]:
    by_id: dict[str, Summary] = {}
    for res in results:
        s = by_id.setdefault(res.check_id, Summary(res.check_id))
        s.instances += 1
        s.passed += res.passed
        if not res.passed:
            s.failures.append(res)
    return [by_id[k] for k in sorted(by_id)]


def format_table(results: list[CheckResult], timings: dict[str, float] | None = None) -> str:
    timings = timings or {}
    lines = [f"{'check':<18} {'instances':>9} {'passed':>7}  status"]
    for s in summarize(results):
        status = "PASS" if s.passed == s.instances else "FAIL"
        lines.append(f"{s.check_id:<18} {s.instances:>9} {s.passed:>7}  {status}")
        for f in s.failures[:5]:
            lines.append(f"    {f.parameters}: expected {f.expected!r}, got {f.actual!r}")
    if timings:
        lines.append("time per check: " + ", ".join(f"{k} {v:.2f}s" for k, v in timings.items()))
    return "\n".join(lines)
