from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from planext.constructions import basic
from planext.constructions.c4 import icosidodecahedron
from planext.graph import (
    AbstractGraph,
    GraphError,
    blocks,
    components,
    degree_profile,
    graph_stats,
)
from strategies import graphs


def path(n):
    return AbstractGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_rejects_loops_and_asymmetry():
    with pytest.raises(GraphError, match="loop"):
        AbstractGraph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError, match="outside"):
        AbstractGraph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError, match="symmetric"):
        AbstractGraph(2, (frozenset({1}), frozenset()))


def test_degree_profile_empty_graph():
    prof = degree_profile(AbstractGraph(0, ()))
    assert prof.counts == {}
    assert prof.min_degree is None and prof.max_degree is None


def test_degree_profile_icosidodecahedron():
    prof = degree_profile(icosidodecahedron().underlying)
    assert prof.counts == {4: 30}


def test_degree_profile_k25():
    prof = degree_profile(basic.complete_bipartite_2(7).underlying)
    assert prof.counts == {2: 5, 5: 2}
    assert prof.min_degree == 2


def test_stats_path():
    st = graph_stats(path(3))
    assert st.is_connected
    assert not st.vertex_connectivity_at_least_2
    assert sorted(st.block_sizes) == [2, 2]
    assert st.cut_vertices == [1]


def test_stats_bowtie():
    st = graph_stats(basic.bowtie().underlying)
    assert sorted(st.block_sizes) == [3, 3]
    assert not st.vertex_connectivity_at_least_2


def test_stats_figure5():
    st = graph_stats(basic.figure5_graph().underlying)
    assert sorted(st.block_sizes) == [4, 4]
    assert st.cut_vertices == [1]


def test_stats_small_cases():
    assert not graph_stats(path(2)).vertex_connectivity_at_least_2
    assert graph_stats(basic.cycle_graph(3).underlying).vertex_connectivity_at_least_2
    disconnected = AbstractGraph.from_edges(4, [(0, 1), (2, 3)])
    st = graph_stats(disconnected)
    assert not st.is_connected and st.component_count == 2


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_degree_sums(g):
    prof = degree_profile(g)
    assert sum(prof.counts.values()) == g.n
    assert sum(d * c for d, c in prof.counts.items()) == 2 * g.edge_count


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_blocks_match_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    got_blocks, cuts = blocks(g)
    want = {frozenset(b) for b in nx.biconnected_components(h)}
    assert {frozenset(b) for b in got_blocks if len(b) > 1} == want
    assert sorted(cuts) == sorted(nx.articulation_points(h))
    assert len(components(g)) == nx.number_connected_components(h) if g.n else True


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_block_order_sum(g):
    st = graph_stats(g)
    # isolated vertices form order-1 blocks, so the identity covers every graph
    assert sum(b - 1 for b in st.block_sizes) == g.n - st.component_count


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=3, max_n=9))
def test_two_connected_iff_single_block(g):
    st = graph_stats(g)
    assert st.vertex_connectivity_at_least_2 == (st.block_sizes == [g.n])
