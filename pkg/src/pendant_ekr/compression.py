"""Base-to-pendant compression of intersecting families on K_n*.

``phi_step(f, i)`` moves every member ``A`` containing base vertex ``x_i``
onto the pendant ``p_i`` whenever some member of ``f`` meets ``A`` in
exactly ``{x_i}``.  ``compress`` applies the steps for ``i = n-1, ..., 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import PreconditionError
from .families import SetFamily, is_intersecting
from .graphs import Graph, VertexSet, members


@dataclass(frozen=True)
class Move:
    step: int
    before: VertexSet
    after: VertexSet


@dataclass(frozen=True)
class CompressionTrace:
    input_family: SetFamily
    output_family: SetFamily
    moved: tuple[Move, ...]


def _base_is_complete(g: Graph) -> bool:
    base = g.base_mask
    return all((g.adjacency[b] & base) == base & ~(1 << b) for b in members(base))


def _require_preconditions(f: SetFamily) -> None:
    g = f.graph
    if g.pendant_pairs is None or not _base_is_complete(g):
        raise PreconditionError("compression is defined on pendant closures of complete graphs only")
    if not is_intersecting(f):
        raise PreconditionError("compression requires an intersecting family")


def _phi(f: SetFamily, i: int, reverse_witness_search: bool = False) -> tuple[SetFamily, list[Move]]:
    g = f.graph
    x = g.pendant_pairs[i][0]
    p = g.pendant_pairs[i][1]
    xbit, pbit = 1 << x, 1 << p
    pool = f.sets[::-1] if reverse_witness_search else f.sets
    out = []
    moves = []
    for a in f.sets:
        if a & xbit and any(a & c == xbit for c in pool):
            b = (a & ~xbit) | pbit
            moves.append(Move(i, a, b))
            out.append(b)
        else:
            out.append(a)
    result = SetFamily.of(g, f.r, out)
    if len(result) != len(f):
        raise AssertionError("compression step collapsed two members")
    return result, moves


def phi_step(f: SetFamily, i: int, reverse_witness_search: bool = False) -> SetFamily:
    """One compression step at base position ``i`` (0-based).

    Only the existence of a witness matters, so the search direction cannot
    change the result; the flag exists so tests can confirm that.
    """
    _require_preconditions(f)
    if not 0 <= i < len(f.graph.pendant_pairs):
        raise PreconditionError(f"base index {i} out of range")
    return _phi(f, i, reverse_witness_search)[0]


def compress(f: SetFamily) -> CompressionTrace:
    _require_preconditions(f)
    current = f
    moved: list[Move] = []
    for i in reversed(range(len(f.graph.pendant_pairs))):
        current, step_moves = _phi(current, i)
        moved.extend(step_moves)
    return CompressionTrace(f, current, tuple(moved))


def meets_only_in_base(f: SetFamily) -> bool:
    """True if some pair of distinct members intersects inside the base vertices only."""
    pend = f.graph.pendant_mask
    sets = f.sets
    for k, a in enumerate(sets):
        for b in sets[k + 1:]:
            common = a & b
            if common and not common & pend:
                return True
    return False


class PXRPartition(NamedTuple):
    pendant_only: SetFamily
    with_base: SetFamily
    residues: SetFamily


def partition_pxr(f: SetFamily) -> PXRPartition:
    """Split into pendant-only members, members with a base vertex, and the
    (r-1)-sets left after removing that base vertex."""
    g = f.graph
    base = g.base_mask
    pendant_only = [s for s in f if not s & base]
    with_base = [s for s in f if s & base]
    residues = [s & ~base for s in with_base]
    return PXRPartition(
        SetFamily(g, f.r, tuple(pendant_only)),
        SetFamily(g, f.r, tuple(with_base)),
        SetFamily.of(g, f.r - 1, residues),
    )
