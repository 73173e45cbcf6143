"""Rotation systems, face traversal and face/edge statistics."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .graph import AbstractGraph, components, is_connected


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneGraph:
    """A graph together with a counterclockwise neighbour order at each vertex.

    Connectivity is not enforced here (reductions may disconnect a graph);
    :func:`build_plane_graph` is the validating entry point for user input.
    """

    underlying: AbstractGraph
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        g = self.underlying
        if len(self.rotation) != g.n:
            raise EmbeddingError(f"rotation lists {len(self.rotation)} vertices, graph has {g.n}")
        for v, rot in enumerate(self.rotation):
            if len(rot) != len(set(rot)):
                dup = next(u for u in rot if rot.count(u) > 1)
                raise EmbeddingError(
                    f"vertex {v}: neighbor {dup} repeated at position {rot.index(dup, rot.index(dup) + 1)}"
                )
            if set(rot) != g.adjacency[v]:
                extra = [(i, u) for i, u in enumerate(rot) if u not in g.adjacency[v]]
                if extra:
                    i, u = extra[0]
                    raise EmbeddingError(f"vertex {v}: position {i} names non-neighbor {u}")
                missing = sorted(g.adjacency[v] - set(rot))
                raise EmbeddingError(f"vertex {v}: rotation omits neighbor(s) {missing}")

    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[int]]) -> PlaneGraph:
        n = len(rotation)
        adj: list[set[int]] = [set() for _ in range(n)]
        for v, rot in enumerate(rotation):
            for i, u in enumerate(rot):
                if not 0 <= u < n:
                    raise EmbeddingError(f"vertex {v}: position {i} names vertex {u} outside [0, {n})")
                if u == v:
                    raise EmbeddingError(f"vertex {v}: position {i} is a loop")
                adj[v].add(u)
        for v in range(n):
            for u in adj[v]:
                if v not in adj[u]:
                    raise EmbeddingError(f"vertex {u}: rotation lacks neighbor {v} (edge {v}-{u} one-sided)")
        g = AbstractGraph(n, tuple(frozenset(s) for s in adj))
        return cls(g, tuple(tuple(r) for r in rotation))

    @property
    def n(self) -> int:
        return self.underlying.n

    @property
    def edge_count(self) -> int:
        return self.underlying.edge_count

    @cached_property
    def _index(self) -> tuple[dict[int, int], ...]:
        return tuple({u: i for i, u in enumerate(rot)} for rot in self.rotation)

    def succ(self, v: int, u: int) -> int:
        """Neighbour following ``u`` counterclockwise around ``v``."""
        rot = self.rotation[v]
        return rot[(self._index[v][u] + 1) % len(rot)]

    def pred(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(self._index[v][u] - 1) % len(rot)]

    @cached_property
    def face_list(self) -> tuple[Face, ...]:
        seen: set[tuple[int, int]] = set()
        out = []
        for v in range(self.n):
            for u in self.rotation[v]:
                if (v, u) in seen:
                    continue
                walk = []
                a, b = v, u
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append((a, b))
                    a, b = b, self.succ(b, a)
                out.append(Face(tuple(walk)))
        return tuple(out)

    @cached_property
    def dart_face(self) -> dict[tuple[int, int], int]:
        return {d: i for i, f in enumerate(self.face_list) for d in f.walk}

    def to_json(self) -> dict:
        return {"n": self.n, "rotation": [list(r) for r in self.rotation]}


@dataclass(frozen=True)
class Face:
    walk: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.walk)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.walk)


def build_plane_graph(g: AbstractGraph, rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    if len(rotation) != g.n:
        raise EmbeddingError(f"rotation lists {len(rotation)} vertices, graph has {g.n}")
    if g.n and not is_connected(g):
        raise EmbeddingError("graph is disconnected")
    return PlaneGraph(g, tuple(tuple(r) for r in rotation))


def faces(pg: PlaneGraph) -> list[Face]:
    return list(pg.face_list)


def euler_check(pg: PlaneGraph) -> bool:
    """n - e + f = 2 on every component (isolated vertices count as spheres)."""
    g = pg.underlying
    comp_of = [0] * g.n
    comps = components(g)
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    nf = Counter(comp_of[f.walk[0][0]] for f in pg.face_list)
    for i, comp in enumerate(comps):
        ne = sum(len(g.adjacency[v]) for v in comp) // 2
        if ne == 0:
            continue
        if len(comp) - ne + nf[i] != 2:
            return False
    return True


def _require_euler(pg: PlaneGraph) -> None:
    if not euler_check(pg):
        raise EmbeddingError("embedding fails the Euler check (not a plane embedding)")


@dataclass(frozen=True)
class FaceProfile:
    f_i: dict[int, int]
    f: int
    f31: int

    def count(self, size: int) -> int:
        return self.f_i.get(size, 0)


def _other_triangles(pg: PlaneGraph, index: int) -> int:
    """Number of edges of triangular face ``index`` shared with a different triangular face."""
    fl = pg.face_list
    k = 0
    for a, b in fl[index].walk:
        j = pg.dart_face[(b, a)]
        if j != index and fl[j].size == 3:
            k += 1
    return k


def face_profile(pg: PlaneGraph) -> FaceProfile:
    _require_euler(pg)
    sizes = Counter(f.size for f in pg.face_list)
    f31 = sum(
        1 for i, f in enumerate(pg.face_list) if f.size == 3 and _other_triangles(pg, i) == 1
    )
    return FaceProfile(dict(sorted(sizes.items())), len(pg.face_list), f31)


@dataclass(frozen=True)
class EdgeFaceClassification:
    per_edge: dict[tuple[int, int], tuple[int, int]]
    e_i: dict[int, int]
    pairs: dict[tuple[int, int], int]

    def e(self, size: int) -> int:
        return self.e_i.get(size, 0)

    def pair(self, i: int, j: int) -> int:
        return self.pairs.get((min(i, j), max(i, j)), 0)


def edge_face_sizes(pg: PlaneGraph) -> dict[tuple[int, int], tuple[int, int]]:
    fl, df = pg.face_list, pg.dart_face
    out = {}
    for u, v in pg.underlying.edges():
        a, b = fl[df[(u, v)]].size, fl[df[(v, u)]].size
        out[(u, v)] = (min(a, b), max(a, b))
    return out


def classify_edges(pg: PlaneGraph) -> EdgeFaceClassification:
    _require_euler(pg)
    per_edge = edge_face_sizes(pg)
    e_i: Counter[int] = Counter()
    for a, b in per_edge.values():
        e_i[a] += 1
        if b != a:
            e_i[b] += 1
    pairs = Counter(per_edge.values())
    return EdgeFaceClassification(per_edge, dict(sorted(e_i.items())), dict(sorted(pairs.items())))


def delete_edges(pg: PlaneGraph, edges: Iterable[tuple[int, int]], drop_isolated: bool = True) -> PlaneGraph:
    """Remove edges keeping the inherited rotation; optionally drop isolated vertices."""
    gone = {frozenset(e) for e in edges}
    rot = [[u for u in r if frozenset((v, u)) not in gone] for v, r in enumerate(pg.rotation)]
    keep = [v for v in range(pg.n) if rot[v] or not drop_isolated]
    return _restrict(rot, keep)


def delete_vertices(pg: PlaneGraph, vertices: Iterable[int]) -> PlaneGraph:
    gone = set(vertices)
    rot = [[u for u in r if u not in gone] for r in pg.rotation]
    return _restrict(rot, [v for v in range(pg.n) if v not in gone])


def _restrict(rot: list[list[int]], keep: list[int]) -> PlaneGraph:
    index = {v: i for i, v in enumerate(keep)}
    return PlaneGraph.from_rotation([[index[u] for u in rot[v]] for v in keep])


def reduce_prime(pg: PlaneGraph) -> PlaneGraph:
    """Delete every edge whose two faces are triangles, then isolated vertices."""
    doomed = [e for e, sizes in edge_face_sizes(pg).items() if sizes == (3, 3)]
    return delete_edges(pg, doomed)


def k4_centers(pg: PlaneGraph) -> list[int]:
    """Greedy (by vertex id) choice of K4 centres to delete.

    A centre is a degree-3 vertex whose three incident faces are triangles.
    Deleting one can only shrink other vertices' degrees, so candidates are
    re-tested against the partially reduced graph.
    """
    rot = [list(r) for r in pg.rotation]

    def succ(v: int, u: int) -> int:
        r = rot[v]
        return r[(r.index(u) + 1) % len(r)]

    chosen = []
    for v in range(pg.n):
        if len(rot[v]) != 3:
            continue
        a, b, c = rot[v]
        # the three faces at v are triangles iff each walk closes after three darts
        if all(succ(x, v) == y and succ(y, x) == v for x, y in ((a, c), (b, a), (c, b))):
            chosen.append(v)
            for x in (a, b, c):
                rot[x].remove(v)
            rot[v] = []
    return chosen


def reduce_k4_centers(pg: PlaneGraph) -> PlaneGraph:
    return delete_vertices(pg, k4_centers(pg))


def plane_graph_from_coordinates(
    coords: Sequence[tuple[float, float]], edges: Iterable[tuple[int, int]]
) -> PlaneGraph:
    """Rotation of a straight-line drawing: neighbours sorted by angle."""
    g = AbstractGraph.from_edges(len(coords), edges)
    rot = []
    for v, (x, y) in enumerate(coords):
        nbrs = sorted(
            g.adjacency[v], key=lambda u: math.atan2(coords[u][1] - y, coords[u][0] - x)
        )
        rot.append(tuple(nbrs))
    return PlaneGraph(g, tuple(rot))


def embedding_from_json(data: Mapping) -> PlaneGraph:
    if not isinstance(data, Mapping) or "n" not in data or "rotation" not in data:
        raise EmbeddingError('embedding JSON needs "n" and "rotation"')
    n, rotation = data["n"], data["rotation"]
    if not isinstance(n, int) or n < 0:
        raise EmbeddingError(f'"n" must be a non-negative integer, got {n!r}')
    if not isinstance(rotation, list) or len(rotation) != n:
        raise EmbeddingError(f'"rotation" must be a list of {n} lists')
    for v, r in enumerate(rotation):
        if not isinstance(r, list):
            raise EmbeddingError(f"vertex {v}: rotation entry is not a list")
        for i, u in enumerate(r):
            if not isinstance(u, int) or isinstance(u, bool):
                raise EmbeddingError(f"vertex {v}: position {i} is not an integer")
    pg = PlaneGraph.from_rotation(rotation)
    return build_plane_graph(pg.underlying, pg.rotation)


def embedding_to_json(pg: PlaneGraph) -> str:
    return json.dumps({"schema_version": 1, **pg.to_json()})
