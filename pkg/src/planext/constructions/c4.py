"""The C4 equality family: the icosidodecahedron and the nested graphs G_k."""

from __future__ import annotations

from functools import lru_cache

from ..embedding import PlaneGraph, plane_graph_from_coordinates
from . import _fixtures as fx
from ._rotation import face_with_vertices, glue_into_face

# outer pentagon of the base drawing, in the order it appears in the fixture
_BASE_OUTER = (25, 29, 28, 27, 26)
_RING_OUTER = (2, 6, 5, 3, 4)
_RING_HOLE = (18, 31, 23, 19, 27)


@lru_cache(maxsize=None)
def icosidodecahedron() -> PlaneGraph:
    return plane_graph_from_coordinates(fx.BASE_POINTS, fx.BASE_EDGES)


@lru_cache(maxsize=None)
def _ring() -> PlaneGraph:
    return plane_graph_from_coordinates(fx.RING_POINTS, fx.RING_EDGES)


@lru_cache(maxsize=None)
def c4_family(k: int) -> PlaneGraph:
    """G_k on 30 + 70k vertices.

    G_k is a copy of G_0 whose central pentagon is filled by the annulus,
    with G_{k-1} placed in the annulus' hole.  The copy of G_0 keeps ids
    0..29, so the outer pentagon of every G_k sits on the same vertices.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    base = icosidodecahedron()
    if k == 0:
        return base
    hole = face_with_vertices(base, fx.BASE_INNER_PENTAGON)
    rim = face_with_vertices(_ring(), _RING_OUTER)
    g, ring_ids = glue_into_face(base, hole, fx.BASE_INNER_ANCHOR, _ring(), rim, fx.RING_OUTER_ANCHOR)
    inner = c4_family(k - 1)
    hole = face_with_vertices(g, [ring_ids[v] for v in _RING_HOLE])
    rim = face_with_vertices(inner, _BASE_OUTER)
    g, _ = glue_into_face(g, hole, ring_ids[fx.RING_HOLE_ANCHOR], inner, rim, fx.BASE_OUTER_ANCHOR)
    return g
