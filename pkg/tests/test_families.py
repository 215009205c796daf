import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_independent_sets, brute_is_intersecting, to_frozen
from pendant_ekr.closed_forms import fib
from pendant_ekr.errors import InvalidParameterError, InvalidVertexError
from pendant_ekr.families import (
    SetFamily,
    canonical_key,
    independent_rsets,
    is_intersecting,
    star,
    star_center,
    star_table,
)
from pendant_ekr.graphs import build_family, delete_closed_neighborhood, members, pendant_family, to_mask
from pendant_ekr.solver import beats_star_family
from test_graphs import graphs


def test_independent_rset_examples():
    assert len(independent_rsets(pendant_family("complete", 3), 2)) == 9
    assert len(independent_rsets(pendant_family("path", 3), 3)) == 5
    for g in (build_family("empty", 0), build_family("path", 4), pendant_family("complete", 3)):
        assert independent_rsets(g, 0).sets == (0,)
    assert len(independent_rsets(build_family("complete", 4), 2)) == 0


def test_star_examples():
    k3 = pendant_family("complete", 3)
    assert len(star(k3, 3, 2)) == 4
    p4 = pendant_family("path", 4)
    assert len(star(p4, 4 + 1, 4)) == fib(1) * fib(2) == 6
    for v in range(p4.n_vertices):
        assert len(star(p4, v, 1)) == 1


def test_star_rejects_bad_arguments():
    g = pendant_family("path", 2)
    with pytest.raises(InvalidParameterError):
        star(g, 0, 0)
    with pytest.raises(InvalidVertexError):
        star(g, 4, 1)


def test_is_intersecting_examples():
    e4 = pendant_family("empty", 4)
    p = [4, 5, 6, 7]
    disjoint = SetFamily.of(e4, 2, [to_mask([p[0], p[1]]), to_mask([p[2], p[3]])])
    assert not is_intersecting(disjoint)
    assert is_intersecting(star(e4, 0, 3))
    assert is_intersecting(beats_star_family(4))
    assert is_intersecting([]) and is_intersecting([0b1])


def test_star_center_examples():
    g = pendant_family("path", 4)
    c = star_center(star(g, 5, 3))
    assert c.is_star and c.vertices >> 5 & 1
    empty = star_center(SetFamily(g, 2, ()))
    assert empty.degenerate and not empty.is_star and empty.vertices == g.universe
    fam = beats_star_family(4)
    common = set(range(g.n_vertices))
    for s in fam:
        common &= to_frozen(s)
    assert common == set()
    assert star_center(fam).vertices == 0 and not star_center(fam).is_star


def test_star_table_examples():
    p6 = pendant_family("path", 6)
    assert star_table(p6, 6).argmax_vertices == {6 + 1, 6 + 4}
    p5 = pendant_family("path", 5)
    t = star_table(p5, 2)
    assert all(t.sizes[5 + i] == 2 * 5 - 2 for i in range(5))
    p4 = pendant_family("path", 4)
    t = star_table(p4, 4)
    assert [t.sizes[4 + i] for i in range(4)] == [5, 6, 6, 5]


def test_star_table_r1_all_tie():
    t = star_table(pendant_family("path", 5), 1)
    assert t.argmax_vertices == frozenset(range(10))


def test_setfamily_validates_members():
    g = pendant_family("path", 2)
    with pytest.raises(InvalidParameterError):
        SetFamily(g, 2, (to_mask([0, 1]),))  # x1 x2 adjacent
    with pytest.raises(InvalidParameterError):
        SetFamily(g, 2, (to_mask([2, 3]), to_mask([0, 3])))  # out of canonical order
    with pytest.raises(InvalidParameterError):
        SetFamily(g, 1, (to_mask([2, 3]),))


@given(graphs(max_n=7), st.integers(0, 4))
def test_enumeration_matches_brute_force(g, r):
    fam = independent_rsets(g, r)
    assert [frozenset(members(s)) for s in fam] == brute_independent_sets(g, r)
    keys = [canonical_key(s) for s in fam]
    assert keys == sorted(keys)


@given(graphs(max_n=7), st.integers(1, 4), st.data())
def test_star_is_filter_of_family(g, r, data):
    if g.n_vertices == 0:
        return
    v = data.draw(st.integers(0, g.n_vertices - 1))
    expected = [s for s in independent_rsets(g, r) if s >> v & 1]
    assert list(star(g, v, r)) == expected
    assert is_intersecting(star(g, v, r))
    assert star_table(g, r).sizes[v] == len(expected)


@given(graphs(max_n=6), st.integers(1, 3), st.data())
def test_is_intersecting_matches_brute_force(g, r, data):
    sets = list(independent_rsets(g, r))
    chosen = data.draw(st.lists(st.sampled_from(sets), unique=True, max_size=6)) if sets else []
    assert is_intersecting(chosen) == brute_is_intersecting([to_frozen(s) for s in chosen])


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_pendant_counts(n):
    g = pendant_family("complete", n)
    for r in range(1, n + 1):
        assert len(independent_rsets(g, r)) == (r + 1) * math.comb(n, r)
        for i in range(n):
            p = n + i
            size = len(star(g, p, r))
            assert size == r * math.comb(n - 1, r - 1)
            down, _ = delete_closed_neighborhood(g, p)
            assert size == len(independent_rsets(down, r - 1))
    assert len(independent_rsets(g, n + 1)) == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_pendant_dominance_on_paths(n):
    g = pendant_family("path", n)
    for r in range(1, n + 1):
        for i in range(n):
            base_star, pend_star = star(g, i, r), star(g, n + i, r)
            assert len(base_star) <= len(pend_star)
            moved = {(s & ~(1 << i)) | (1 << (n + i)) for s in base_star}
            assert moved <= set(pend_star)


@pytest.mark.parametrize("n", range(0, 12))
def test_full_size_sets_take_one_per_pair(n):
    g = pendant_family("path", n)
    fam = independent_rsets(g, n)
    assert len(fam) == fib(n)
    for s in fam:
        for i in range(n):
            assert (s >> i & 1) + (s >> (n + i) & 1) == 1
    for k in range(1, n + 1):
        assert len(star(g, n + k - 1, n)) == fib(k - 1) * fib(n - k)


@pytest.mark.parametrize("n", range(2, 10))
def test_second_pendants_attain_max_star(n):
    g = pendant_family("path", n)
    for r in range(1, n + 1):
        top = star_table(g, r).argmax_vertices
        assert {n + 1, 2 * n - 2} <= top
