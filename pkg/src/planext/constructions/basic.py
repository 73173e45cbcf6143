"""Small named plane graphs and the two trivial extremal families."""

from __future__ import annotations

from ..embedding import PlaneGraph, plane_graph_from_coordinates


def complete_bipartite_2(n: int) -> PlaneGraph:
    """K_{2,n-2}: poles 0 (above) and 1 (below) joined to rim vertices 2..n-1 on a line."""
    if n < 4:
        raise ValueError(f"K_(2,n-2) needs n >= 4, got {n}")
    rim = list(range(2, n))
    rot = [rim, rim[::-1]] + [[0, 1] for _ in rim]
    return PlaneGraph.from_rotation(rot)


def double_wheel(n: int) -> PlaneGraph:
    """Cycle of length n-2 plus an inner pole 0 and an outer pole 1."""
    if n < 6:
        raise ValueError(f"double wheel needs n >= 6 (n = 5 contains K4), got {n}")
    m = n - 2
    rim = list(range(2, n))
    rot = [rim, rim[::-1]]
    for j in range(m):
        nxt, prv = rim[(j + 1) % m], rim[(j - 1) % m]
        rot.append([1, nxt, 0, prv])
    return PlaneGraph.from_rotation(rot)


def cycle_graph(k: int) -> PlaneGraph:
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return PlaneGraph.from_rotation([[(i + 1) % k, (i - 1) % k] for i in range(k)])


def tetrahedron() -> PlaneGraph:
    return plane_graph_from_coordinates(
        [(0.0, 0.0), (2.0, 0.0), (1.0, 2.0), (1.0, 0.7)],
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    )


def diamond() -> PlaneGraph:
    """K4 minus an edge; the middle edge is 1-2."""
    return plane_graph_from_coordinates(
        [(0.0, 0.0), (1.0, 1.0), (1.0, -1.0), (2.0, 0.0)],
        [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
    )


def triangle_with_pendant() -> PlaneGraph:
    return plane_graph_from_coordinates(
        [(0.0, 0.0), (2.0, 0.0), (1.0, 1.5), (3.0, 0.0)],
        [(0, 1), (0, 2), (1, 2), (1, 3)],
    )


def figure5_graph() -> PlaneGraph:
    """Two K4's sharing vertex 1, each drawn with its centre inside.

    Left K4: 0 (0,0), 1 (3,0), centre 2 (1.5,1), top 3 (1.5,2.5).
    Right K4: 1, 4 (6,0), centre 5 (4.5,1), top 6 (4.5,2.5).
    """
    pts = [(0, 0), (3, 0), (1.5, 1), (1.5, 2.5), (6, 0), (4.5, 1), (4.5, 2.5)]
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
             (1, 4), (1, 5), (1, 6), (4, 5), (4, 6), (5, 6)]
    return plane_graph_from_coordinates(pts, edges)


def bowtie() -> PlaneGraph:
    """Figure 5 with both K4 centres removed: two triangles sharing vertex 1."""
    pts = [(0, 0), (3, 0), (1.5, 2.5), (6, 0), (4.5, 2.5)]
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (3, 4)]
    return plane_graph_from_coordinates(pts, edges)


FIGURE8_POINTS = [
    (0.0, 0.0),  # 0 p
    (1.5, 0.0),  # 1 q
    (0.75, 0.5),  # 2 centre of the K4
    (0.75, 1.25),  # 3 apex
    (-0.5, -1.0),  # 4 L1
    (-1.25, -1.0),  # 5 L2
    (2.0, -1.0),  # 6 R1
    (2.75, -1.0),  # 7 R2
    (0.0, -2.0),  # 8 r
    (1.5, -2.0),  # 9 s
]
FIGURE8_EDGES = [
    (0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3),
    (0, 4), (8, 4), (1, 6), (9, 6), (8, 9), (6, 7), (4, 5),
    (1, 7), (9, 7), (0, 5), (8, 5),
]


def figure8_graph() -> PlaneGraph:
    """A K4 on top of a hexagonal band; the left-hand graph of the G' picture."""
    return plane_graph_from_coordinates(FIGURE8_POINTS, FIGURE8_EDGES)

