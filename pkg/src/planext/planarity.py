"""Planarity testing.

Two independent routes:

* :func:`is_planar` delegates to networkx's left-right planarity test to get
  an embedding or a Kuratowski subgraph.  It is the reference route.
* :func:`planar_masks` is a self-contained bitmask test used in the search
  hot path: strip degree <= 1 vertices, smooth degree-2 vertices, split into
  blocks and run Demoucron-Malgrange-Pertuiset path embedding on each block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from .embedding import PlaneGraph
from .graph import AbstractGraph, iter_bits


@dataclass(frozen=True)
class Obstruction:
    kind: str  # "K5" or "K3,3"
    branch_vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: PlaneGraph | None = None
    obstruction: Obstruction | None = None

    def __bool__(self) -> bool:
        return self.planar


def to_networkx(g: AbstractGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def classify_obstruction(n: int, edges: Sequence[tuple[int, int]]) -> Obstruction:
    """Identify a Kuratowski subdivision given as an edge list.

    Raises ValueError if the edges do not form a subdivision of K5 or K3,3.
    """
    sub = AbstractGraph.from_edges(n, edges)
    used = [v for v in range(n) if sub.degree(v)]
    if any(sub.degree(v) not in (2, 3, 4) for v in used):
        raise ValueError("obstruction has a vertex of degree outside 2..4")
    branch = tuple(v for v in used if sub.degree(v) > 2)
    # follow each subdivided path between branch vertices
    links: set[frozenset[int]] = set()
    bset = set(branch)
    for b in branch:
        for first in sub.adjacency[b]:
            prev, cur = b, first
            while cur not in bset:
                prev, cur = cur, next(x for x in sub.adjacency[cur] if x != prev)
            if cur == b:
                raise ValueError("obstruction path returns to its start")
            links.add(frozenset((b, cur)))
    nlinks = sum(sub.degree(b) for b in branch) // 2
    if len(links) != nlinks:
        raise ValueError("parallel paths between branch vertices")
    degs = {sub.degree(b) for b in branch}
    if len(branch) == 5 and degs == {4} and len(links) == 10:
        kind = "K5"
    elif len(branch) == 6 and degs == {3} and len(links) == 9:
        skel = AbstractGraph.from_edges(n, [tuple(e) for e in links])
        if not nx.is_bipartite(to_networkx(skel).subgraph(branch)):
            raise ValueError("degree-3 skeleton is not K3,3")
        kind = "K3,3"
    else:
        raise ValueError("edges are not a K5 or K3,3 subdivision")
    return Obstruction(kind, branch, tuple(sorted(sub.edges())))


def is_planar(g: AbstractGraph) -> PlanarityResult:
    planar, cert = nx.check_planarity(to_networkx(g), counterexample=True)
    if planar:
        # networkx stores clockwise order; reverse it for counterclockwise rotations
        rotation = tuple(tuple(reversed(list(cert.neighbors_cw_order(v)))) for v in range(g.n))
        return PlanarityResult(True, embedding=PlaneGraph(g, rotation))
    edges = [(min(u, v), max(u, v)) for u, v in cert.edges()]
    return PlanarityResult(False, obstruction=classify_obstruction(g.n, edges))


# ---------------------------------------------------------------------------
# bitmask route


def _reduce(adj: dict[int, int]) -> None:
    """In place: drop vertices of degree <= 1 and smooth degree-2 vertices."""
    queue = [v for v, m in adj.items() if m.bit_count() <= 2]
    while queue:
        v = queue.pop()
        if v not in adj:
            continue
        m = adj[v]
        d = m.bit_count()
        if d > 2:
            continue
        del adj[v]
        bit = 1 << v
        for u in iter_bits(m):
            adj[u] &= ~bit
        if d == 2:
            a, b = iter_bits(m)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        for u in iter_bits(m):
            if adj[u].bit_count() <= 2:
                queue.append(u)


def _blocks(adj: dict[int, int]) -> list[int]:
    """Vertex masks of the biconnected components with at least one edge."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out = []
    clock = 0
    for root in adj:
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        estack: list[tuple[int, int]] = []
        stack = [(root, -1, list(iter_bits(adj[root])))]
        while stack:
            v, parent, todo = stack[-1]
            if todo:
                u = todo.pop()
                if u not in disc:
                    disc[u] = low[u] = clock
                    clock += 1
                    estack.append((v, u))
                    stack.append((u, v, list(iter_bits(adj[u]))))
                elif u != parent and disc[u] < disc[v]:
                    estack.append((v, u))
                    low[v] = min(low[v], disc[u])
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                mask = 0
                while True:
                    a, b = estack.pop()
                    mask |= (1 << a) | (1 << b)
                    if a == parent and b == v:
                        break
                out.append(mask)
    return out


def _find_cycle(adj: dict[int, int], start: int) -> list[int]:
    parent = {start: -1}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in iter_bits(adj[v]):
            if u == parent[v]:
                continue
            if u in parent:
                # u is an ancestor-or-visited vertex; build the cycle through the tree
                pv, pu = [v], [u]
                while pv[-1] != -1:
                    pv.append(parent[pv[-1]])
                while pu[-1] != -1:
                    pu.append(parent[pu[-1]])
                common = set(pv) & set(pu)
                a = [x for x in pv if x not in common]
                b = [x for x in pu if x not in common]
                meet = next(x for x in pv if x in common)
                return a + [meet] + b[::-1]
            parent[u] = v
            stack.append(u)
    raise ValueError("block has no cycle")


def _dmp(adj: dict[int, int]) -> bool:
    """Demoucron-Malgrange-Pertuiset on a 2-connected graph (dict of masks)."""
    start = next(iter(adj))
    cycle = _find_cycle(adj, start)
    placed = 0
    for v in cycle:
        placed |= 1 << v
    h = {v: 0 for v in adj}
    k = len(cycle)
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        h[a] |= 1 << b
        h[b] |= 1 << a
    faces = [list(cycle), list(cycle)]
    fmasks = [placed, placed]
    while True:
        fragments = []  # (attachment mask, path builder data)
        for v in iter_bits(placed):
            rest = adj[v] & ~h[v] & placed
            for u in iter_bits(rest):
                if u > v:
                    fragments.append(((1 << u) | (1 << v), ("chord", v, u)))
        outside = 0
        for v in adj:
            if not placed >> v & 1:
                outside |= 1 << v
        while outside:
            seed = (outside & -outside).bit_length() - 1
            comp = 1 << seed
            frontier = comp
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= adj[v]
                nxt &= outside & ~comp
                comp |= nxt
                frontier = nxt
            outside &= ~comp
            att = 0
            for v in iter_bits(comp):
                att |= adj[v] & placed
            fragments.append((att, ("comp", comp)))
        if not fragments:
            return True
        choice = None
        for att, data in fragments:
            ok = [i for i, fm in enumerate(fmasks) if att & ~fm == 0]
            if not ok:
                return False
            if choice is None or len(ok) < len(choice[2]):
                choice = (att, data, ok)
                if len(ok) == 1:
                    break
        att, data, ok = choice
        fi = ok[0]
        if data[0] == "chord":
            path = [data[1], data[2]]
        else:
            path = _fragment_path(adj, data[1], att)
        for i in range(len(path) - 1):
            a, b = path[i], path[i + 1]
            h[a] |= 1 << b
            h[b] |= 1 << a
        for v in path:
            placed |= 1 << v
        face = faces[fi]
        i, j = face.index(path[0]), face.index(path[-1])
        inner = path[1:-1]
        if i <= j:
            f1 = face[i:j + 1] + inner[::-1]
            f2 = face[j:] + face[:i + 1] + inner
        else:
            f1 = face[i:] + face[:j + 1] + inner[::-1]
            f2 = face[j:i + 1] + inner
        faces[fi] = f1
        faces.append(f2)
        fmasks[fi] = sum(1 << v for v in f1)
        fmasks.append(sum(1 << v for v in f2))


def _fragment_path(adj: dict[int, int], comp: int, att: int) -> list[int]:
    a = (att & -att).bit_length() - 1
    parent: dict[int, int] = {}
    frontier = []
    for v in iter_bits(adj[a] & comp):
        parent[v] = a
        frontier.append(v)
    while frontier:
        nxt = []
        for v in frontier:
            other = adj[v] & att & ~(1 << a)
            if other:
                b = (other & -other).bit_length() - 1
                path = [b, v]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                return path[::-1]
            for u in iter_bits(adj[v] & comp):
                if u not in parent:
                    parent[u] = v
                    nxt.append(u)
        frontier = nxt
    raise ValueError("fragment with a single attachment in a 2-connected graph")


def planar_masks(masks: Sequence[int]) -> bool:
    """Planarity of a graph given as adjacency bitmasks."""
    adj = {v: m for v, m in enumerate(masks) if m}
    _reduce(adj)
    nv = len(adj)
    if nv <= 4:
        return True
    ne = sum(m.bit_count() for m in adj.values()) // 2
    if ne > 3 * nv - 6:
        return False
    for block in _blocks(adj):
        bn = block.bit_count()
        if bn < 5:
            continue
        sub = {v: adj[v] & block for v in iter_bits(block)}
        be = sum(m.bit_count() for m in sub.values()) // 2
        if be > 3 * bn - 6:
            return False
        if bn == 5:
            continue
        if not _dmp(sub):
            return False
    return True
