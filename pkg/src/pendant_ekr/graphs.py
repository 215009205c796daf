"""Bitset graphs, the pendant closure G -> G*, and well-coveredness predicates.

Vertex sets are plain Python ints used as bit-vectors: bit ``v`` set means
vertex ``v`` is a member.  Graphs are immutable; every operation returns a
new graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, Optional, Sequence

from .errors import CapacityError, InvalidParameterError, InvalidVertexError

MAX_VERTICES = 128

VertexSet = int
FamilyKind = Literal["empty", "path", "cycle", "complete"]


def members(mask: VertexSet) -> list[int]:
    """Vertex indices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n_vertices-1``.

    ``adjacency[i]`` is the neighbourhood bitmask of vertex ``i``.  When the
    graph is a pendant closure, ``pendant_pairs`` lists ``(base, pendant)``
    index pairs covering every vertex exactly once.
    """

    n_vertices: int
    adjacency: tuple[int, ...]
    pendant_pairs: Optional[tuple[tuple[int, int], ...]] = None
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n = self.n_vertices
        if n < 0:
            raise InvalidParameterError("n_vertices must be non-negative")
        if n > MAX_VERTICES:
            raise CapacityError(f"{n} vertices exceed capacity {MAX_VERTICES}")
        if len(self.adjacency) != n:
            raise InvalidParameterError("adjacency must have one row per vertex")
        universe = (1 << n) - 1
        for i, row in enumerate(self.adjacency):
            if row & ~universe:
                raise InvalidVertexError(f"row {i} references a vertex >= {n}")
            if row >> i & 1:
                raise InvalidParameterError(f"self-loop at vertex {i}")
            for j in members(row):
                if not self.adjacency[j] >> i & 1:
                    raise InvalidParameterError(f"asymmetric adjacency between {i} and {j}")
        if self.labels is not None and len(self.labels) != n:
            raise InvalidParameterError("labels must have one entry per vertex")
        if self.pendant_pairs is not None:
            seen = 0
            for base, pend in self.pendant_pairs:
                if not (0 <= base < n and 0 <= pend < n):
                    raise InvalidVertexError(f"pendant pair ({base}, {pend}) out of range")
                if self.adjacency[pend] != 1 << base:
                    raise InvalidParameterError(f"vertex {pend} is not a pendant of {base}")
                pair = (1 << base) | (1 << pend)
                if seen & pair:
                    raise InvalidParameterError("pendant pairs overlap")
                seen |= pair
            if seen != universe:
                raise InvalidParameterError("pendant pairs do not cover every vertex")

    @property
    def universe(self) -> VertexSet:
        return (1 << self.n_vertices) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n_vertices) for v in members(self.adjacency[u]) if u < v]

    @property
    def n_edges(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return self.adjacency[self._check(v)].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        return self.adjacency[self._check(v)]

    def closed_neighborhood(self, v: int) -> VertexSet:
        return self.adjacency[self._check(v)] | (1 << v)

    def is_independent(self, mask: VertexSet) -> bool:
        if mask & ~self.universe:
            return False
        rest = mask
        while rest:
            low = rest & -rest
            if self.adjacency[low.bit_length() - 1] & mask:
                return False
            rest ^= low
        return True

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def format_set(self, mask: VertexSet) -> str:
        return "{" + ",".join(self.label(v) for v in members(mask)) + "}"

    @property
    def base_mask(self) -> VertexSet:
        """Base (non-pendant) vertices of a pendant closure."""
        if self.pendant_pairs is None:
            raise InvalidParameterError("graph carries no pendant metadata")
        return to_mask(b for b, _ in self.pendant_pairs)

    @property
    def pendant_mask(self) -> VertexSet:
        if self.pendant_pairs is None:
            raise InvalidParameterError("graph carries no pendant metadata")
        return to_mask(p for _, p in self.pendant_pairs)

    def pendant_of(self, base: int) -> int:
        if self.pendant_pairs is None:
            raise InvalidParameterError("graph carries no pendant metadata")
        for b, p in self.pendant_pairs:
            if b == base:
                return p
        raise InvalidVertexError(f"vertex {base} is not a base vertex")

    def _check(self, v: int) -> int:
        if not 0 <= v < self.n_vertices:
            raise InvalidVertexError(f"vertex {v} out of range 0..{self.n_vertices - 1}")
        return v


def from_edges(
    n: int,
    edges: Iterable[tuple[int, int]],
    pendant_pairs: Optional[Sequence[tuple[int, int]]] = None,
    labels: Optional[Sequence[str]] = None,
    name: str = "",
) -> Graph:
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceed capacity {MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertexError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise InvalidParameterError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(
        n,
        tuple(rows),
        tuple(tuple(p) for p in pendant_pairs) if pendant_pairs is not None else None,
        tuple(labels) if labels is not None else None,
        name,
    )


def build_family(kind: FamilyKind, n: int) -> Graph:
    """Standard graph of the given kind on vertices ``0..n-1``.

    ``n = 0`` is accepted for every kind except ``cycle`` so that base cases
    such as P_0* can be built.
    """
    if n < 0:
        raise InvalidParameterError("n must be non-negative")
    if kind == "empty":
        edges: list[tuple[int, int]] = []
    elif kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        if n < 3:
            raise InvalidParameterError("cycle requires n >= 3")
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif kind == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    else:
        raise InvalidParameterError(f"unknown graph family {kind!r}")
    letter = {"empty": "E", "path": "P", "cycle": "C", "complete": "K"}[kind]
    return from_edges(n, edges, name=f"{letter}_{n}")


def pendant_closure(g: Graph) -> Graph:
    """Append one pendant vertex to every vertex of ``g``.

    Base vertex ``i`` keeps index ``i``; its pendant gets index ``n + i``.
    Labels follow the ``x1..xn``, ``p1..pn`` convention (1-based).
    """
    if g.pendant_pairs is not None:
        raise InvalidParameterError("pendant closure may only be applied once")
    n = g.n_vertices
    if 2 * n > MAX_VERTICES:
        raise CapacityError(f"{2 * n} vertices exceed capacity {MAX_VERTICES}")
    rows = [g.adjacency[i] | (1 << (n + i)) for i in range(n)] + [1 << i for i in range(n)]
    labels = [f"x{i + 1}" for i in range(n)] + [f"p{i + 1}" for i in range(n)]
    name = f"{g.name}*" if g.name else ""
    return Graph(2 * n, tuple(rows), tuple((i, n + i) for i in range(n)), tuple(labels), name)


def pendant_family(kind: FamilyKind, n: int) -> Graph:
    return pendant_closure(build_family(kind, n))


def induced_subgraph(g: Graph, keep: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep`` with vertices renumbered in ascending order.

    Pendant metadata survives when the surviving pairs still cover every
    remaining vertex.
    """
    old = members(keep & g.universe)
    relabel = {v: k for k, v in enumerate(old)}
    rows = []
    for v in old:
        rows.append(to_mask(relabel[u] for u in members(g.adjacency[v] & keep)))
    pairs = None
    if g.pendant_pairs is not None:
        kept = [(relabel[b], relabel[p]) for b, p in g.pendant_pairs if b in relabel and p in relabel]
        if 2 * len(kept) == len(old):
            pairs = tuple(kept)
    labels = tuple(g.labels[v] for v in old) if g.labels is not None else None
    return Graph(len(old), tuple(rows), pairs, labels), relabel


def delete_closed_neighborhood(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """``g`` with ``N[v]`` removed, plus the old -> new index map."""
    return induced_subgraph(g, g.universe & ~g.closed_neighborhood(v))


def maximal_independent_sets(g: Graph) -> Iterator[VertexSet]:
    """All maximal independent sets (Bron-Kerbosch with pivoting on the complement)."""
    universe = g.universe
    comp = [universe & ~row & ~(1 << v) for v, row in enumerate(g.adjacency)]

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pool = p | x
        pivot = max(members(pool), key=lambda u: (comp[u] & p).bit_count())
        for v in members(p & ~comp[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    yield from expand(0, universe, 0)


def _maximal_sizes(g: Graph) -> set[int]:
    return {s.bit_count() for s in maximal_independent_sets(g)}


def min_maximal_independent(g: Graph) -> int:
    """Minimum size of a maximal independent set (0 for the empty graph)."""
    return min(_maximal_sizes(g))


def independence_number(g: Graph) -> int:
    return max(_maximal_sizes(g))


def is_well_covered(g: Graph) -> bool:
    return len(_maximal_sizes(g)) == 1


def pendant_edges_form_perfect_matching(g: Graph) -> bool:
    """True iff the edges at degree-1 vertices are disjoint and cover V(g)."""
    pendant_edges = set()
    for v in range(g.n_vertices):
        if g.adjacency[v].bit_count() == 1:
            u = g.adjacency[v].bit_length() - 1
            pendant_edges.add((min(u, v), max(u, v)))
    covered = 0
    for u, v in pendant_edges:
        pair = (1 << u) | (1 << v)
        if covered & pair:
            return False
        covered |= pair
    return covered == g.universe
