"""Shared hypothesis strategies."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from planext.graph import AbstractGraph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> AbstractGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return AbstractGraph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def graph_and_perm(draw, max_n: int = 8):
    g = draw(graphs(max_n=max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, list(perm)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 10) -> AbstractGraph:
    """A random spanning tree plus a sparse sprinkling of extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = [(v, draw(st.integers(0, v - 1))) for v in range(1, n)]
    pairs = list(combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n, unique=True)) if pairs else []
    return AbstractGraph.from_edges(n, edges + extra)
