import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_is_intersecting, brute_max_intersecting, to_frozen
from pendant_ekr.checks import random_oracle_instance
from pendant_ekr.closed_forms import fib
from pendant_ekr.errors import InvalidParameterError, SolverCapError
from pendant_ekr.families import independent_rsets, is_intersecting, star, star_table
from pendant_ekr.graphs import build_family, pendant_family
from pendant_ekr.solver import (
    all_maximum_intersecting,
    _lex_cliques,
    alternating_set,
    beats_star_family,
    ekr_verdict,
    holroyd_talbot_report,
    intersection_graph,
    max_clique_size,
    max_intersecting,
    naive_max_intersecting,
    solver_cap,
)
from test_graphs import graphs


def brute_first_maximum(sets, size):
    """Lexicographically first intersecting subfamily of the given size."""
    frozen = [to_frozen(s) for s in sets]
    for combo in combinations(range(len(sets)), size):
        if brute_is_intersecting([frozen[k] for k in combo]):
            return [sets[k] for k in combo]
    return None


def test_max_intersecting_examples():
    assert max_intersecting(build_family("empty", 5), 2)[0] == 4
    assert max_intersecting(pendant_family("complete", 4), 2)[0] == 6
    assert max_intersecting(pendant_family("path", 4), 4)[0] == fib(4) - 1 == 7


@pytest.mark.parametrize("g,r", [
    (pendant_family("complete", 4), 2),
    (pendant_family("path", 4), 4),
    (build_family("empty", 5), 2),
    (pendant_family("path", 3), 2),
])
def test_witness_is_lexicographically_least(g, r):
    size, witness = max_intersecting(g, r)
    sets = list(independent_rsets(g, r))
    assert list(witness) == brute_first_maximum(sets, size)
    assert is_intersecting(witness) and len(witness) == size


def test_max_intersecting_rejects_r0():
    with pytest.raises(InvalidParameterError):
        max_intersecting(build_family("empty", 3), 0)


def test_verdict_examples():
    assert ekr_verdict(pendant_family("complete", 5), 2, strictness=True).verdict == "strictly-EKR"
    assert ekr_verdict(pendant_family("complete", 4), 2).verdict == "EKR"
    for n in (4, 5, 6):
        v = ekr_verdict(pendant_family("path", n), n)
        assert v.verdict == "not-EKR"
        assert v.max_intersecting_size == fib(n) - 1
        assert v.max_star_size == 2 * fib(n - 2)


def test_k4_boundary_has_only_star_maxima():
    g = pendant_family("complete", 4)
    sets = [to_frozen(s) for s in independent_rsets(g, 2)]
    maxima = [c for c in combinations(sets, 6) if brute_is_intersecting(c)]
    assert len(maxima) == 4
    assert all(frozenset.intersection(*c) for c in maxima)
    fams, truncated = all_maximum_intersecting(g, 2)
    assert not truncated and len(fams) == 4
    v = ekr_verdict(g, 2, strictness=True)
    assert v.verdict == "strictly-EKR" and v.maximum_families == 4


def test_strictness_detects_non_star_maxima_and_cap():
    g = build_family("empty", 4)
    v = ekr_verdict(g, 2, strictness=True)
    assert v.verdict == "EKR-not-strict" and v.maximum_families == 8
    assert ekr_verdict(g, 2, strictness=True, family_cap=3).verdict == "unknown-strictness"


def test_beats_star_family_examples():
    b4 = beats_star_family(4)
    assert len(b4) == 7 and is_intersecting(b4) and len(b4) > 2 * fib(2)
    assert len(beats_star_family(5)) == fib(5) - 1 == 12
    b2 = beats_star_family(2)
    g2 = pendant_family("path", 2)
    assert len(b2) == 2 == star_table(g2, 2).max_size
    assert brute_max_intersecting([to_frozen(s) for s in independent_rsets(g2, 2)]) == 2
    with pytest.raises(InvalidParameterError):
        beats_star_family(1)


def test_alternating_set_uses_odd_base_positions():
    g = pendant_family("path", 4)
    assert g.format_set(alternating_set(4)) == "{x1,x3,p2,p4}"
    assert alternating_set(4) in beats_star_family(4)
    assert g.universe & ~alternating_set(4) not in beats_star_family(4)


def test_holroyd_talbot_examples():
    rows = holroyd_talbot_report(pendant_family("complete", 6), 3)
    assert [row.ht_applicable for row in rows] == [True, True, True]
    assert all(row.verdict.is_ekr and not row.violation for row in rows)
    rows = holroyd_talbot_report(pendant_family("path", 4), 4)
    last = rows[-1]
    assert last.verdict.verdict == "not-EKR" and not last.ht_applicable and not last.violation
    rows = holroyd_talbot_report(build_family("empty", 2), 1)
    assert rows[0].verdict.verdict == "EKR"


def test_cap_errors_are_per_row(monkeypatch):
    monkeypatch.setenv("EKR_SOLVER_CAP", "10")
    assert solver_cap() == 10
    with pytest.raises(SolverCapError, match="cap 10"):
        max_intersecting(pendant_family("complete", 4), 2)
    rows = holroyd_talbot_report(pendant_family("complete", 4), 2)
    assert rows[0].verdict is not None
    assert rows[1].verdict is None and "cap 10" in rows[1].error


def test_solver_cap_env_validation(monkeypatch):
    monkeypatch.setenv("EKR_SOLVER_CAP", "lots")
    with pytest.raises(InvalidParameterError):
        solver_cap()
    monkeypatch.delenv("EKR_SOLVER_CAP")
    assert solver_cap() == 5000


@given(graphs(max_n=6), st.integers(1, 3))
def test_branch_and_bound_matches_brute_force(g, r):
    sets = list(independent_rsets(g, r))
    if len(sets) > 12:
        sets = sets[:12]
    expected = brute_max_intersecting([to_frozen(s) for s in sets])
    assert max_clique_size(intersection_graph(sets)) == expected
    assert naive_max_intersecting(sets) == expected


def test_seeded_oracle_instances():
    rng = random.Random(11)
    for _ in range(30):
        g, r, sets = random_oracle_instance(rng)
        assert len(sets) <= 20
        assert max_intersecting(g, r)[0] == naive_max_intersecting(sets)


@given(graphs(max_n=6), st.integers(1, 3))
def test_max_intersecting_dominates_stars(g, r):
    v = ekr_verdict(g, r)
    assert v.max_intersecting_size >= v.max_star_size
    assert (v.verdict == "not-EKR") == (v.max_intersecting_size > v.max_star_size)


@given(graphs(max_n=6), st.integers(1, 3), st.data())
def test_subfamilies_of_stars_intersect(g, r, data):
    if g.n_vertices == 0:
        return
    v = data.draw(st.integers(0, g.n_vertices - 1))
    members_ = list(star(g, v, r))
    sub = data.draw(st.lists(st.sampled_from(members_), unique=True)) if members_ else []
    assert is_intersecting(sub)


def test_deep_clique_does_not_recurse():
    # every set shares element 0, so the whole family is one clique
    sets = [1 | 1 << (k + 1) for k in range(1500)]
    adj = intersection_graph(sets, cap=len(sets))
    assert max_clique_size(adj) == 1500
    fams, truncated = _lex_cliques(adj, 1500, 2)
    assert fams == [list(range(1500))] and not truncated
