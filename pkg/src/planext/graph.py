"""Simple undirected graphs and their degree/connectivity statistics."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when adjacency data does not describe a simple undirected graph."""


@dataclass(frozen=True)
class AbstractGraph:
    """Immutable simple graph on vertices ``0..n-1``."""

    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError(f"expected {self.n} adjacency sets, got {len(self.adjacency)}")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {v} lists neighbor {u} outside [0, {self.n})")
                if u == v:
                    raise GraphError(f"loop at vertex {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> AbstractGraph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> AbstractGraph:
        return cls(len(masks), tuple(frozenset(iter_bits(m)) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency rows as integer bitmasks."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, perm: Sequence[int]) -> AbstractGraph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return AbstractGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced(self, vertices: Sequence[int]) -> AbstractGraph:
        """Induced subgraph, relabelled densely in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        return AbstractGraph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )


def iter_bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DegreeProfile:
    counts: dict[int, int]
    min_degree: int | None
    max_degree: int | None


def degree_profile(g: AbstractGraph) -> DegreeProfile:
    counts = Counter(len(s) for s in g.adjacency)
    if not counts:
        return DegreeProfile({}, None, None)
    return DegreeProfile(dict(sorted(counts.items())), min(counts), max(counts))


@dataclass(frozen=True)
class GraphStats:
    edge_count: int
    is_connected: bool
    vertex_connectivity_at_least_2: bool
    block_sizes: list[int]
    cut_vertices: list[int]
    component_count: int


def components(g: AbstractGraph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(sorted(comp))
    return out


def blocks(g: AbstractGraph) -> tuple[list[list[int]], list[int]]:
    """Biconnected components (as vertex lists) and cut vertices.

    Iterative Hopcroft-Tarjan. Isolated vertices form blocks of order 1.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    nbrs = [sorted(s) for s in g.adjacency]
    out: list[list[int]] = []
    cuts: set[int] = set()
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not nbrs[root]:
            disc[root] = clock
            clock += 1
            out.append([root])
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, 0)]
        root_children = 0
        while stack:
            v, parent, i = stack[-1]
            if i < len(nbrs[v]):
                stack[-1] = (v, parent, i + 1)
                u = nbrs[v][i]
                if disc[u] == -1:
                    disc[u] = low[u] = clock
                    clock += 1
                    edge_stack.append((v, u))
                    stack.append((u, v, 0))
                    if v == root:
                        root_children += 1
                elif u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, v):
                        break
                out.append(sorted(block))
        if root_children > 1:
            cuts.add(root)
    return out, sorted(cuts)


def graph_stats(g: AbstractGraph) -> GraphStats:
    comps = components(g)
    blks, cuts = blocks(g)
    connected = len(comps) == 1
    return GraphStats(
        edge_count=g.edge_count,
        is_connected=connected,
        vertex_connectivity_at_least_2=connected and g.n >= 3 and not cuts,
        block_sizes=sorted(len(b) for b in blks),
        cut_vertices=cuts,
        component_count=len(comps),
    )


def is_connected(g: AbstractGraph) -> bool:
    return len(components(g)) == 1
