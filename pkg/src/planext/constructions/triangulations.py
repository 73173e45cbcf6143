"""Triangulations T_k with six degree-4 vertices and a matching E* among them.

Vertices 0..5 are the degree-4 vertices and E* = {01, 23, 45}; every other
vertex has degree 6.  New members come from subdividing every edge of an
existing T_k (adding a triangle inside each face) and then repairing the
three subdivided E* edges, which maps k to 4k + 3.
"""

from __future__ import annotations

from functools import lru_cache

from ..embedding import PlaneGraph, euler_check
from ..graph import AbstractGraph
from ..planarity import is_planar
from ._rotation import RotationEditor

E_STAR = ((0, 1), (2, 3), (4, 5))
SEEDS = (6, 15)


class InadmissibleOrder(ValueError):
    pass


def admissible_orders(limit: int = 1000) -> list[int]:
    out: set[int] = set()
    todo = [k for k in SEEDS if k <= limit]
    while todo:
        k = todo.pop()
        if k in out:
            continue
        out.add(k)
        if 4 * k + 3 <= limit:
            todo.append(4 * k + 3)
    return sorted(out)


def is_admissible(k: int) -> bool:
    while k not in SEEDS:
        if k < min(SEEDS) or (k - 3) % 4:
            return False
        k = (k - 3) // 4
    return True


def is_triangulation(pg: PlaneGraph) -> bool:
    return pg.n >= 3 and euler_check(pg) and all(f.size == 3 for f in pg.face_list)


def lemma_conditions(pg: PlaneGraph) -> dict[str, bool]:
    """Triangulation plus conditions (i) degrees 4 on 0..5, (ii) degree 6 elsewhere, (iii) E* edges."""
    g = pg.underlying
    return {
        "triangulation": is_triangulation(pg),
        "i": g.n >= 6 and all(g.degree(v) == 4 for v in range(6)),
        "ii": all(g.degree(v) == 6 for v in range(6, g.n)),
        "iii": g.n >= 6 and all(g.has_edge(u, v) for u, v in E_STAR),
    }


def octahedron_t6() -> PlaneGraph:
    # drawn with 0 on the left, 5 on the right, 1-2-3-4 down the middle and
    # the edge 1-4 routed around the right of 5
    return PlaneGraph.from_rotation([
        [2, 1, 4, 3],
        [4, 0, 2, 5],
        [1, 0, 3, 5],
        [5, 2, 0, 4],
        [1, 5, 3, 0],
        [1, 2, 3, 4],
    ])


# Three stacked units (M_i, U_i degree 4; B_i, R_i, L_i degree 6), ids:
# M0 U0 M1 U1 M2 U2 = 0..5, B0 B1 B2 = 6..8, R0 R1 R2 = 9..11, L0 L1 L2 = 12..14
T15_EDGES = [
    (6, 0), (0, 1), (1, 7), (7, 2), (2, 3), (3, 8), (8, 4), (4, 5), (5, 6),
    (9, 1), (9, 0), (9, 6), (12, 1), (12, 0), (12, 6),
    (10, 3), (10, 2), (10, 7), (13, 3), (13, 2), (13, 7),
    (11, 5), (11, 4), (11, 8), (14, 5), (14, 4), (14, 8),
    (9, 7), (10, 8), (12, 7), (13, 8),
    (9, 10), (10, 11), (12, 13), (13, 14), (11, 9), (14, 12), (11, 6), (14, 6),
]


def t15() -> PlaneGraph:
    # a triangulation is 3-connected, so its embedding is unique up to mirror image
    result = is_planar(AbstractGraph.from_edges(15, T15_EDGES))
    if not result.planar:
        raise AssertionError("T15 edge list is not planar")
    return result.embedding


def grow_triangulation(t: PlaneGraph) -> PlaneGraph:
    """Subdivide every edge and join the three new vertices inside each face.

    Vertex ``n + i`` is the subdivision vertex of the ``i``-th edge in sorted
    order; original vertices keep their ids and degrees.
    """
    if not is_triangulation(t):
        raise ValueError("input is not a plane triangulation")
    n = t.n
    mid = {}
    for i, (u, v) in enumerate(t.underlying.edges()):
        mid[(u, v)] = mid[(v, u)] = n + i
    rot: list[list[int]] = [[mid[(u, v)] for v in t.rotation[u]] for u in range(n)]
    for u, v in t.underlying.edges():
        v1, v2 = t.succ(u, v), t.pred(u, v)
        rot.append([v, mid[(v, v1)], mid[(u, v1)], u, mid[(u, v2)], mid[(v, v2)]])
    return PlaneGraph.from_rotation(rot)


def fix_condition_iii(t: PlaneGraph) -> PlaneGraph:
    """Restore E* after :func:`grow_triangulation`.

    For each former E* edge v1v2 (now split by a degree-6 vertex m with
    rotation [v2, b, a, v1, c, d]) delete m and insert two degree-6 hubs
    x, y and a new adjacent pair p, q of degree-4 vertices.  v1 and v2 reach
    degree 6.  The six new degree-4 vertices become 0..5 with E* = {pq}.
    """
    g = t.underlying
    ed = RotationEditor(t)
    new_pairs = []
    for v1, v2 in E_STAR:
        if g.n <= 5 or g.has_edge(v1, v2):
            raise ValueError(f"vertices {v1},{v2} are not a subdivided E* pair")
        common = g.adjacency[v1] & g.adjacency[v2]
        if len(common) != 1:
            raise ValueError(f"vertices {v1},{v2} do not share exactly one subdivision vertex")
        (m,) = common
        r = list(t.rotation[m])
        if len(r) != 6:
            raise ValueError(f"subdivision vertex {m} has degree {len(r)}, expected 6")
        k = r.index(v2)
        r = r[k:] + r[:k]
        if r[3] != v1:
            raise ValueError(f"rotation at {m} does not have {v1} opposite {v2}")
        _, b, a, _, c, d = r
        del ed.rot[m]
        x, y, p, q = (ed.new_vertex() for _ in range(4))
        ed.rot[x] = [b, a, v1, p, q, v2]
        ed.rot[y] = [v2, q, p, v1, c, d]
        ed.rot[p] = [q, x, v1, y]
        ed.rot[q] = [v2, x, p, y]
        ed.replace(v1, m, [y, p, x])
        ed.replace(v2, m, [x, q, y])
        for w in (a, b):
            ed.replace(w, m, [x])
        for w in (c, d):
            ed.replace(w, m, [y])
        new_pairs += [p, q]
    order = new_pairs + sorted(v for v in ed.rot if v not in new_pairs)
    index = {v: i for i, v in enumerate(order)}
    return PlaneGraph.from_rotation([[index[u] for u in ed.rot[v]] for v in order])


@lru_cache(maxsize=None)
def triangulation_T(k: int) -> PlaneGraph:
    if not is_admissible(k):
        raise InadmissibleOrder(
            f"k={k} is not admissible; admissible k up to 500: {admissible_orders(500)}"
        )
    if k == 6:
        return octahedron_t6()
    if k == 15:
        return t15()
    return fix_condition_iii(grow_triangulation(triangulation_T((k - 3) // 4)))
