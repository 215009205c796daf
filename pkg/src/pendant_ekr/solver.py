"""Exact maximum intersecting families and EKR verdicts.

A maximum intersecting subfamily of I^(r)(G) is a maximum clique of the
graph whose nodes are the independent r-sets and whose edges join sets that
meet.  Cliques are found with a bitset branch-and-bound that bounds each
subproblem by a greedy colouring of its candidate set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import InvalidParameterError, SolverCapError
from .families import SetFamily, independent_rsets, star_center, star_table
from .graphs import Graph, VertexSet, members, min_maximal_independent, pendant_family

DEFAULT_SOLVER_CAP = 5000
DEFAULT_FAMILY_CAP = 10_000
NAIVE_MAX_SETS = 22

VERDICTS = ("strictly-EKR", "EKR-not-strict", "EKR", "not-EKR", "unknown-strictness")


def solver_cap() -> int:
    raw = os.environ.get("EKR_SOLVER_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_SOLVER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidParameterError(f"EKR_SOLVER_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InvalidParameterError("EKR_SOLVER_CAP must be positive")
    return cap


def intersection_graph(sets: Sequence[VertexSet], cap: Optional[int] = None) -> list[int]:
    """Node-adjacency bitmasks: node ``a`` sees node ``b`` iff the sets meet."""
    cap = solver_cap() if cap is None else cap
    if len(sets) > cap:
        raise SolverCapError(len(sets), cap)
    containing: dict[int, int] = {}
    for k, s in enumerate(sets):
        for v in members(s):
            containing[v] = containing.get(v, 0) | (1 << k)
    adj = []
    for k, s in enumerate(sets):
        row = 0
        for v in members(s):
            row |= containing[v]
        adj.append(row & ~(1 << k))
    return adj


def _colour_classes(adj: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``cand``; returns vertices and their colour numbers."""
    order: list[int] = []
    colours: list[int] = []
    uncoloured = cand
    k = 0
    while uncoloured:
        k += 1
        q = uncoloured
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v] & ~low
            uncoloured &= ~low
            order.append(v)
            colours.append(k)
    return order, colours


def _colour_bound(adj: Sequence[int], cand: int) -> int:
    k = 0
    while cand:
        k += 1
        q = cand
        while q:
            low = q & -q
            q &= ~adj[low.bit_length() - 1] & ~low
            cand &= ~low
    return k


def max_clique_size(adj: Sequence[int]) -> int:
    """Clique number by colour-bounded branch and bound.

    Nodes are renumbered by non-increasing degree (ties by lowest index)
    before the search.
    """
    m = len(adj)
    if m == 0:
        return 0
    order = sorted(range(m), key=lambda v: (-adj[v].bit_count(), v))
    pos = {v: k for k, v in enumerate(order)}
    radj = []
    for v in order:
        row = 0
        for u in members(adj[v]):
            row |= 1 << pos[u]
        radj.append(row)

    # explicit stack: maximum cliques can run thousands of nodes deep
    best = 1
    verts, colours = _colour_classes(radj, (1 << m) - 1)
    stack = [[0, verts, colours, len(verts) - 1, (1 << m) - 1]]
    while stack:
        frame = stack[-1]
        size, verts, colours, idx, cand = frame
        if idx < 0 or size + colours[idx] <= best:
            stack.pop()
            continue
        v = verts[idx]
        sub = cand & radj[v]
        frame[3] = idx - 1
        frame[4] = cand & ~(1 << v)
        if sub:
            sv, sc = _colour_classes(radj, sub)
            stack.append([size + 1, sv, sc, len(sv) - 1, sub])
        elif size + 1 > best:
            best = size + 1
    return best


def _lex_cliques(adj: Sequence[int], target: int, limit: int) -> tuple[list[list[int]], bool]:
    """Cliques of size ``target`` in lexicographic order of node index lists.

    Stops after ``limit`` cliques; the flag reports whether more exist.
    """
    if target == 0:
        return [[]], False
    found: list[list[int]] = []
    chosen: list[int] = []
    stack = [(1 << len(adj)) - 1]
    while stack:
        need = target - len(chosen)
        if need == 0:
            if len(found) >= limit:
                return found, True
            found.append(list(chosen))
            stack.pop()
            chosen.pop()
            continue
        cand = stack[-1]
        if cand.bit_count() < need or _colour_bound(adj, cand) < need:
            stack.pop()
            if chosen:
                chosen.pop()
            continue
        low = cand & -cand
        stack[-1] = cand ^ low
        v = low.bit_length() - 1
        chosen.append(v)
        stack.append(cand & ~low & adj[v])
    return found, False


def max_intersecting(g: Graph, r: int, cap: Optional[int] = None) -> tuple[int, SetFamily]:
    """Size of a maximum intersecting family of independent r-sets and the
    lexicographically least one attaining it."""
    if r < 1:
        raise InvalidParameterError("r must be positive")
    family = independent_rsets(g, r)
    adj = intersection_graph(family.sets, cap)
    size = max_clique_size(adj)
    cliques, _ = _lex_cliques(adj, size, 1)
    witness = SetFamily(g, r, tuple(family.sets[k] for k in cliques[0]))
    return size, witness


def all_maximum_intersecting(
    g: Graph, r: int, size: Optional[int] = None, limit: int = DEFAULT_FAMILY_CAP, cap: Optional[int] = None
) -> tuple[list[SetFamily], bool]:
    """Every maximum intersecting family, up to ``limit`` of them."""
    family = independent_rsets(g, r)
    adj = intersection_graph(family.sets, cap)
    if size is None:
        size = max_clique_size(adj)
    cliques, truncated = _lex_cliques(adj, size, limit)
    return [SetFamily(g, r, tuple(family.sets[k] for k in c)) for c in cliques], truncated


def naive_max_intersecting(sets: Sequence[VertexSet]) -> int:
    """Largest intersecting subfamily by checking every one of the 2^m subfamilies."""
    m = len(sets)
    if m > NAIVE_MAX_SETS:
        raise InvalidParameterError(f"naive search limited to {NAIVE_MAX_SETS} sets, got {m}")
    if m == 0:
        return 0
    subsets = np.arange(1 << m, dtype=np.int64)
    ok = np.ones(1 << m, dtype=bool)
    for a in range(m):
        for b in range(a + 1, m):
            if not sets[a] & sets[b]:
                ok &= ~(((subsets >> a) & 1).astype(bool) & ((subsets >> b) & 1).astype(bool))
    sizes = np.zeros(1 << m, dtype=np.int64)
    for a in range(m):
        sizes += (subsets >> a) & 1
    return int(sizes[ok].max())


@dataclass(frozen=True)
class EkrVerdict:
    graph: str
    n_vertices: int
    r: int
    mu: int
    max_star_size: int
    max_intersecting_size: int
    witness: SetFamily
    verdict: str
    ht_applicable: bool
    maximum_families: Optional[int] = None

    @property
    def is_ekr(self) -> bool:
        return self.verdict != "not-EKR"


def _ht_applicable(r: int, mu: int) -> bool:
    return 1 <= r and 2 * r <= mu


def ekr_verdict(
    g: Graph,
    r: int,
    strictness: bool = False,
    cap: Optional[int] = None,
    family_cap: int = DEFAULT_FAMILY_CAP,
) -> EkrVerdict:
    """Compare the largest star with the largest intersecting family.

    With ``strictness`` every maximum family is enumerated (up to
    ``family_cap``) and checked for a common vertex; hitting the cap yields
    ``unknown-strictness``.  Without it an EKR graph is reported as ``EKR``.
    """
    table = star_table(g, r)
    size, witness = max_intersecting(g, r, cap)
    mu = min_maximal_independent(g)
    n_max = None
    if size > table.max_size:
        verdict = "not-EKR"
    elif strictness and size > 0:
        fams, truncated = all_maximum_intersecting(g, r, size, family_cap, cap)
        n_max = len(fams)
        if truncated:
            verdict = "unknown-strictness"
        elif all(star_center(f).is_star for f in fams):
            verdict = "strictly-EKR"
        else:
            verdict = "EKR-not-strict"
    else:
        verdict = "EKR"
    return EkrVerdict(
        graph=g.name or f"graph({g.n_vertices})",
        n_vertices=g.n_vertices,
        r=r,
        mu=mu,
        max_star_size=table.max_size,
        max_intersecting_size=size,
        witness=witness,
        verdict=verdict,
        ht_applicable=_ht_applicable(r, mu),
        maximum_families=n_max,
    )


@dataclass(frozen=True)
class HTRow:
    r: int
    ht_applicable: bool
    verdict: Optional[EkrVerdict] = None
    error: Optional[str] = None

    @property
    def violation(self) -> bool:
        return self.ht_applicable and self.verdict is not None and self.verdict.verdict == "not-EKR"


def holroyd_talbot_report(
    g: Graph, r_max: int, strictness: bool = False, cap: Optional[int] = None
) -> list[HTRow]:
    """Verdicts for ``r = 1..r_max``; a row that exceeds the solver cap carries the error instead."""
    mu = min_maximal_independent(g)
    rows = []
    for r in range(1, r_max + 1):
        try:
            rows.append(HTRow(r, _ht_applicable(r, mu), ekr_verdict(g, r, strictness, cap)))
        except SolverCapError as exc:
            rows.append(HTRow(r, _ht_applicable(r, mu), error=str(exc)))
    return rows


def alternating_set(n: int) -> VertexSet:
    """The n-set of P_n* taking x_i at odd 1-based positions and p_i at even ones."""
    mask = 0
    for pos in range(1, n + 1):
        mask |= 1 << (pos - 1 if pos % 2 == 1 else n + pos - 1)
    return mask


def beats_star_family(n: int) -> SetFamily:
    """All independent n-sets of P_n* except the complement of ``alternating_set(n)``."""
    if n < 2:
        raise InvalidParameterError("need n >= 2")
    g = pendant_family("path", n)
    complement = g.universe & ~alternating_set(n)
    return SetFamily(g, n, tuple(s for s in independent_rsets(g, n) if s != complement))
