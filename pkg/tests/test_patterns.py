from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planext.constructions import basic, c4, c5
from planext.graph import AbstractGraph
from planext.patterns import (
    CUSTOM_MAX_VERTICES,
    ForbiddenPattern,
    PatternError,
    contains_pattern,
    find_subgraph,
    parse_pattern,
)
from strategies import graphs

K4 = basic.tetrahedron().underlying


def brute_cycle(g: AbstractGraph, k: int) -> bool:
    for sub in combinations(range(g.n), k):
        first, *rest = sub
        for perm in permutations(rest):
            cyc = (first, *perm)
            if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                return True
    return False


def brute_subgraph(g: AbstractGraph, h: AbstractGraph) -> bool:
    for image in permutations(range(g.n), h.n):
        if all(g.has_edge(image[u], image[v]) for u, v in h.edges()):
            return True
    return False


def test_k4_contains_c4():
    found, cyc = contains_pattern(K4, ForbiddenPattern.cycle(4), witness=True)
    assert found
    assert all(K4.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4))


def test_icosidodecahedron_c4_free():
    assert not contains_pattern(c4.icosidodecahedron().underlying, ForbiddenPattern.cycle(4))


def test_g_star_c5_free():
    assert not contains_pattern(c5.c5_family(6).underlying, ForbiddenPattern.cycle(5))


def test_pattern_larger_than_graph():
    assert not contains_pattern(basic.cycle_graph(3).underlying, ForbiddenPattern.cycle(5))
    assert not contains_pattern(AbstractGraph(0, ()), ForbiddenPattern.clique(3))


def test_custom_witness_is_mapping():
    bowtie = basic.bowtie().underlying
    found, image = contains_pattern(basic.figure5_graph().underlying, ForbiddenPattern.custom(bowtie), True)
    assert found
    g = basic.figure5_graph().underlying
    assert all(g.has_edge(image[u], image[v]) for u, v in bowtie.edges())


def test_parse_pattern(tmp_path):
    assert parse_pattern("c4") == ForbiddenPattern.cycle(4)
    assert parse_pattern("K4") == ForbiddenPattern.clique(4)
    assert parse_pattern("k3").name == "k3"
    f = tmp_path / "p.g6"
    f.write_text("C~\n")
    assert parse_pattern(f"custom:{f}").as_graph() == K4
    for bad in ("c2", "x4", "c", "k"):
        with pytest.raises(PatternError):
            parse_pattern(bad)
    with pytest.raises(PatternError, match="cannot read"):
        parse_pattern(f"custom:{tmp_path / 'missing.g6'}")
    f.write_text("C~\nC~\n")
    with pytest.raises(PatternError, match="exactly one"):
        parse_pattern(f"custom:{f}")


def test_custom_validation():
    with pytest.raises(PatternError, match="limit"):
        ForbiddenPattern.custom(basic.cycle_graph(CUSTOM_MAX_VERTICES + 1).underlying)
    with pytest.raises(PatternError, match="connected"):
        ForbiddenPattern.custom(AbstractGraph.from_edges(4, [(0, 1), (2, 3)]))


@settings(max_examples=250, deadline=None)
@given(graphs(max_n=8), st.integers(3, 6))
def test_cycle_matches_brute_force(g, k):
    found, cyc = contains_pattern(g, ForbiddenPattern.cycle(k), witness=True)
    assert found == brute_cycle(g, k)
    if found:
        assert len(set(cyc)) == k
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.integers(3, 5))
def test_clique_matches_brute_force(g, r):
    want = any(all(g.has_edge(u, v) for u, v in combinations(s, 2)) for s in combinations(range(g.n), r))
    assert contains_pattern(g, ForbiddenPattern.clique(r)) == want


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), graphs(min_n=1, max_n=4))
def test_custom_matches_brute_force(g, h):
    from planext.graph import is_connected

    if not is_connected(h):
        return
    assert (find_subgraph(g.masks, h) is not None) == brute_subgraph(g, h)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.integers(3, 6), st.data())
def test_monotone_under_supergraph(g, k, data):
    p = ForbiddenPattern.cycle(k)
    if not contains_pattern(g, p):
        return
    missing = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]
    extra = data.draw(st.lists(st.sampled_from(missing), unique=True) if missing else st.just([]))
    bigger = AbstractGraph.from_edges(g.n, g.edges() + extra)
    assert contains_pattern(bigger, p)
