"""The C5 construction G*: diamond-holders on E*, snowflakes on every vertex of T_k."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..embedding import PlaneGraph
from ._rotation import RotationEditor
from .triangulations import E_STAR, InadmissibleOrder, admissible_orders, is_admissible, triangulation_T


@dataclass(frozen=True)
class Fragment:
    graph: PlaneGraph
    attachments: tuple[int, ...]


def _holder(ed: RotationEditor, a: int, b: int) -> None:
    """Replace edge a-b by two paths a-L-b, a-R-b and a diamond P,l,r,Q hung between them."""
    left, right, p, q, lo, ro = (ed.new_vertex() for _ in range(6))
    ed.replace(a, b, [left, p, right])
    ed.replace(b, a, [right, q, left])
    ed.rot[left] = [a, b]
    ed.rot[right] = [b, a]
    ed.rot[p] = [a, lo, ro]
    ed.rot[q] = [ro, lo, b]
    ed.rot[lo] = [ro, p, q]
    ed.rot[ro] = [p, lo, q]


def _snowflake(ed: RotationEditor, c: int) -> None:
    """Replace the degree-6 vertex c by a hexagon, each spoke becoming a K4."""
    w = ed.rot.pop(c)
    if len(w) != 6:
        raise ValueError(f"snowflake needs a degree-6 centre, vertex {c} has degree {len(w)}")
    h = [ed.new_vertex() for _ in range(6)]
    a = [ed.new_vertex() for _ in range(6)]
    for i in range(6):
        j, k = (i + 1) % 6, (i - 1) % 6
        ed.rot[h[i]] = [h[k], a[k], w[k], w[i], a[i], h[j]]
        ed.rot[a[i]] = [w[i], h[j], h[i]]
        ed.replace(w[i], c, [h[j], a[i], h[i]])


def diamond_holder() -> Fragment:
    ed = RotationEditor(PlaneGraph.from_rotation([[1], [0]]))
    _holder(ed, 0, 1)
    pg, _ = ed.build()
    return Fragment(pg, (0, 1))


def snowflake() -> Fragment:
    ed = RotationEditor(PlaneGraph.from_rotation([[1, 2, 3, 4, 5, 6]] + [[0]] * 6))
    _snowflake(ed, 0)
    pg, index = ed.build()
    return Fragment(pg, tuple(index[v] for v in range(1, 7)))


@lru_cache(maxsize=None)
def c5_family(k: int) -> PlaneGraph:
    if not is_admissible(k):
        raise InadmissibleOrder(
            f"k={k} is not admissible; admissible k up to 500: {admissible_orders(500)}"
        )
    t = triangulation_T(k)
    ed = RotationEditor(t)
    star = {frozenset(e) for e in E_STAR}
    for u, v in t.underlying.edges():
        if frozenset((u, v)) in star:
            _holder(ed, u, v)
        else:
            ed.subdivide(u, v)
    for c in range(t.n):
        _snowflake(ed, c)
    pg, _ = ed.build()
    return pg
