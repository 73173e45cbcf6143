from __future__ import annotations

from itertools import combinations

import networkx as nx
from hypothesis import given, settings

from planext.canon import automorphism_generators, canonical_form, canonical_graph6, orbits
from planext.constructions import basic, c4
from planext.graph import AbstractGraph
from planext.graph6 import write_graph6
from strategies import graph_and_perm, graphs


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield AbstractGraph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def test_c4_relabel_invariant():
    cycle = basic.cycle_graph(4).underlying
    cert = canonical_form(cycle).certificate
    for perm in ([1, 2, 3, 0], [3, 1, 0, 2], [2, 0, 1, 3]):
        assert canonical_form(cycle.relabel(perm)).certificate == cert


def test_c4_vs_path():
    cycle = basic.cycle_graph(4).underlying
    path = AbstractGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert canonical_graph6(cycle) != canonical_graph6(path)


def test_eleven_graphs_on_four_vertices():
    assert len({canonical_graph6(g) for g in all_graphs(4)}) == 11


def test_class_counts_match_known_sequence():
    # graphs on n vertices up to isomorphism: 1, 2, 4, 11, 34
    for n, want in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)]:
        assert len({canonical_graph6(g) for g in all_graphs(n)}) == want


def test_labeling_maps_onto_canonical_graph():
    g = basic.figure5_graph().underlying
    form = canonical_form(g)
    assert write_graph6(g.relabel(form.labeling)).encode() == form.certificate


def test_automorphism_group_sizes():
    # orbit counts on well-known symmetric graphs
    ico = c4.icosidodecahedron().underlying
    gens = automorphism_generators(ico)
    assert len(set(orbits(gens, ico.n))) == 1  # vertex-transitive
    for gen in gens:
        assert ico.relabel(gen) == ico
    f5 = basic.figure5_graph().underlying
    assert len(set(orbits(automorphism_generators(f5), f5.n))) == 2


@settings(max_examples=400, deadline=None)
@given(graph_and_perm(max_n=9))
def test_relabel_invariance(gp):
    g, perm = gp
    assert canonical_form(g.relabel(perm)).certificate == canonical_form(g).certificate


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_certificate_iff_isomorphic(a, b):
    def nxg(g):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        return h

    same = canonical_form(a).certificate == canonical_form(b).certificate
    assert same == nx.is_isomorphic(nxg(a), nxg(b))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_generators_are_automorphisms(g):
    for gen in automorphism_generators(g):
        assert g.relabel(gen) == g
