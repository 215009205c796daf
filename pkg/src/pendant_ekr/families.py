"""Enumeration of independent r-sets, r-stars and star tables."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from .errors import InvalidParameterError, InvalidVertexError
from .graphs import Graph, VertexSet, members


def canonical_key(mask: VertexSet) -> tuple[int, ...]:
    """Sort key of the canonical family order (lexicographic on index lists)."""
    return tuple(members(mask))


@dataclass(frozen=True)
class SetFamily:
    """Duplicate-free, canonically ordered family of independent r-sets of ``graph``."""

    graph: Graph
    r: int
    sets: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        prev = None
        for s in self.sets:
            if s.bit_count() != self.r:
                raise InvalidParameterError(f"member {self.graph.format_set(s)} does not have {self.r} elements")
            if not self.graph.is_independent(s):
                raise InvalidParameterError(f"member {self.graph.format_set(s)} is not independent")
            key = canonical_key(s)
            if prev is not None and key <= prev:
                raise InvalidParameterError("members must be strictly increasing in canonical order")
            prev = key

    @classmethod
    def of(cls, graph: Graph, r: int, sets: Iterable[VertexSet]) -> "SetFamily":
        """Build a family from arbitrary member order, dropping duplicates."""
        return cls(graph, r, tuple(sorted(set(sets), key=canonical_key)))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.sets)

    def __contains__(self, s: object) -> bool:
        return s in self.sets

    def as_lists(self) -> list[list[int]]:
        return [members(s) for s in self.sets]


FamilyLike = Union[SetFamily, Sequence[VertexSet]]


def iter_independent_rsets(g: Graph, r: int, within: VertexSet | None = None) -> Iterator[VertexSet]:
    """Independent r-sets inside ``within`` in canonical order (backtracking)."""
    if r < 0:
        raise InvalidParameterError("r must be non-negative")
    universe = g.universe
    allowed = universe if within is None else within & universe
    non_nbr = [universe & ~row for row in g.adjacency]

    def extend(chosen: int, cand: int, need: int) -> Iterator[int]:
        if need == 0:
            yield chosen
            return
        while cand.bit_count() >= need:
            low = cand & -cand
            cand ^= low
            yield from extend(chosen | low, cand & non_nbr[low.bit_length() - 1], need - 1)

    return extend(0, allowed, r)


@lru_cache(maxsize=4096)
def independent_rsets(g: Graph, r: int) -> SetFamily:
    """The full family of independent r-sets; ``r = 0`` gives ``{∅}``."""
    return SetFamily(g, r, tuple(iter_independent_rsets(g, r)))


def count_independent_rsets(g: Graph, r: int) -> int:
    if r < 0:
        return 0
    return len(independent_rsets(g, r))


@lru_cache(maxsize=4096)
def star(g: Graph, v: int, r: int) -> SetFamily:
    """All independent r-sets of ``g`` containing ``v``."""
    if not 0 <= v < g.n_vertices:
        raise InvalidVertexError(f"vertex {v} out of range 0..{g.n_vertices - 1}")
    if r < 1:
        raise InvalidParameterError("a star needs r >= 1")
    bit = 1 << v
    rest = iter_independent_rsets(g, r - 1, g.universe & ~g.closed_neighborhood(v))
    return SetFamily.of(g, r, (s | bit for s in rest))


def _sets(f: FamilyLike) -> Sequence[VertexSet]:
    return f.sets if isinstance(f, SetFamily) else f


def is_intersecting(f: FamilyLike) -> bool:
    sets = _sets(f)
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if not a & b:
                return False
    return True


@dataclass(frozen=True)
class StarCenter:
    """Vertices common to every member; ``degenerate`` marks the empty family."""

    vertices: VertexSet
    degenerate: bool = False

    @property
    def is_star(self) -> bool:
        return not self.degenerate and self.vertices != 0


def star_center(f: FamilyLike, n_vertices: int | None = None) -> StarCenter:
    sets = _sets(f)
    if not sets:
        if n_vertices is None:
            n_vertices = f.graph.n_vertices if isinstance(f, SetFamily) else 0
        return StarCenter((1 << n_vertices) - 1, degenerate=True)
    common = sets[0]
    for s in sets[1:]:
        common &= s
    return StarCenter(common)


@dataclass(frozen=True)
class StarTable:
    r: int
    sizes: dict[int, int]
    argmax_vertices: frozenset[int]

    @property
    def max_size(self) -> int:
        return max(self.sizes.values(), default=0)


def star_table(g: Graph, r: int) -> StarTable:
    """Star size of every vertex for fixed ``r``, computed from one enumeration."""
    if r < 1:
        raise InvalidParameterError("a star needs r >= 1")
    counts = [0] * g.n_vertices
    for s in independent_rsets(g, r):
        for v in members(s):
            counts[v] += 1
    sizes = dict(enumerate(counts))
    best = max(counts, default=0)
    argmax = frozenset(v for v, c in sizes.items() if c == best) if best > 0 else frozenset()
    return StarTable(r, sizes, argmax)
