"""Brute-force reference implementations built on itertools and plain sets.

Deliberately independent of the bitset code paths under test.
"""

from itertools import combinations


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def brute_independent_sets(g, r):
    edges = edge_set(g)
    return [
        frozenset(c)
        for c in combinations(range(g.n_vertices), r)
        if not any(frozenset(p) in edges for p in combinations(c, 2))
    ]


def brute_maximal_independent_sets(g):
    everything = []
    for r in range(g.n_vertices + 1):
        everything.extend(brute_independent_sets(g, r))
    edges = edge_set(g)
    out = []
    for s in everything:
        extendable = any(
            v not in s and not any(frozenset((v, u)) in edges for u in s) for v in range(g.n_vertices)
        )
        if not extendable:
            out.append(s)
    return out


def brute_is_intersecting(sets):
    return all(a & b for a, b in combinations(sets, 2))


def brute_max_intersecting(sets):
    """Largest k such that some k-subfamily is pairwise intersecting (top-down scan)."""
    sets = list(sets)
    for k in range(len(sets), 0, -1):
        for combo in combinations(sets, k):
            if brute_is_intersecting(combo):
                return k
    return 0


def to_frozen(mask):
    return frozenset(v for v in range(mask.bit_length()) if mask >> v & 1)
