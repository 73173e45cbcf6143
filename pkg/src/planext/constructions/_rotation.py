"""Mutable rotation-system editing used while assembling constructions."""

from __future__ import annotations

from typing import Sequence

from ..embedding import PlaneGraph


class RotationEditor:
    def __init__(self, pg: PlaneGraph | None = None):
        self.rot: dict[int, list[int]] = {}
        self._next = 0
        if pg is not None:
            for v, r in enumerate(pg.rotation):
                self.rot[v] = list(r)
            self._next = pg.n

    def new_vertex(self) -> int:
        v = self._next
        self._next += 1
        self.rot[v] = []
        return v

    def replace(self, v: int, old: int, new: Sequence[int]) -> None:
        """Replace neighbour ``old`` in the rotation at ``v`` by the run ``new``."""
        r = self.rot[v]
        i = r.index(old)
        r[i:i + 1] = list(new)

    def remove_vertex(self, v: int) -> None:
        for u in self.rot.pop(v):
            if u in self.rot and v in self.rot[u]:
                self.rot[u].remove(v)

    def subdivide(self, u: int, v: int) -> int:
        s = self.new_vertex()
        self.rot[s] = [u, v]
        self.replace(u, v, [s])
        self.replace(v, u, [s])
        return s

    def build(self) -> tuple[PlaneGraph, dict[int, int]]:
        """Relabel densely (increasing old id) and freeze."""
        order = sorted(self.rot)
        index = {v: i for i, v in enumerate(order)}
        pg = PlaneGraph.from_rotation([[index[u] for u in self.rot[v]] for v in order])
        return pg, index


def face_with_vertices(pg: PlaneGraph, vertices: Sequence[int]) -> list[int]:
    """Vertex sequence (traversal order) of the unique face on exactly these vertices."""
    want = set(vertices)
    hits = [f.vertices for f in pg.face_list if f.size == len(want) and set(f.vertices) == want]
    if len(hits) != 1:
        raise ValueError(f"expected one face on {sorted(want)}, found {len(hits)}")
    return list(hits[0])


def glue_into_face(
    outer: PlaneGraph,
    hole: Sequence[int],
    hole_anchor: int,
    inner: PlaneGraph,
    rim: Sequence[int],
    rim_anchor: int,
) -> tuple[PlaneGraph, list[int]]:
    """Fill face ``hole`` of ``outer`` with ``inner``, identifying its face ``rim``.

    Both faces are given as vertex sequences in traversal order and must be
    simple cycles of the same length.  The rim is laid along the hole in the
    opposite direction (each shared edge is seen from opposite sides), with
    ``rim_anchor`` landing on ``hole_anchor``.  Returns the glued graph and
    the new id of every vertex of ``inner``.
    """
    p = len(hole)
    if len(rim) != p:
        raise ValueError("hole and rim lengths differ")
    i0, j0 = list(hole).index(hole_anchor), list(rim).index(rim_anchor)
    phi: dict[int, int] = {rim[(j0 + t) % p]: hole[(i0 - t) % p] for t in range(p)}
    ed = RotationEditor(outer)
    for v in range(inner.n):
        if v not in phi:
            phi[v] = ed.new_vertex()
    for v in range(inner.n):
        if v in rim:
            continue
        ed.rot[phi[v]] = [phi[u] for u in inner.rotation[v]]
    for j in range(p):
        o = rim[j]
        nxt, prv = rim[(j + 1) % p], rim[(j - 1) % p]
        r = list(inner.rotation[o])
        k = r.index(nxt)
        r = r[k:] + r[:k]
        if r[-1] != prv:
            raise ValueError(f"rim is not a face boundary at inner vertex {o}")
        interior = [phi[u] for u in r[1:-1]]
        f = phi[o]
        before = phi[nxt]  # = hole predecessor of f
        after = phi[prv]
        rot = ed.rot[f]
        k = rot.index(before)
        if rot[(k + 1) % len(rot)] != after:
            raise ValueError(f"hole is not a face boundary at outer vertex {f}")
        rot[k + 1:k + 1] = interior
    pg, index = ed.build()
    return pg, [index[phi[v]] for v in range(inner.n)]
