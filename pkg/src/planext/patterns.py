"""Forbidden subgraphs: cycles, cliques and small arbitrary patterns."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .graph import AbstractGraph, is_connected, iter_bits
from .graph6 import read_graph6, write_graph6
from .planarity import Obstruction, PlanarityResult, is_planar, planar_masks  # noqa: F401

CUSTOM_MAX_VERTICES = 12


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class ForbiddenPattern:
    kind: str  # "cycle" | "clique" | "custom"
    size: int
    graph: AbstractGraph | None = None

    def __post_init__(self) -> None:
        if self.kind in ("cycle", "clique"):
            if self.size < 3:
                raise PatternError(f"{self.kind} needs size >= 3, got {self.size}")
        elif self.kind == "custom":
            if self.graph is None or self.graph.n != self.size:
                raise PatternError("custom pattern needs its graph")
            if self.size > CUSTOM_MAX_VERTICES:
                raise PatternError(
                    f"custom pattern has {self.size} vertices; limit is {CUSTOM_MAX_VERTICES}"
                )
            if self.size == 0 or not is_connected(self.graph):
                raise PatternError("custom pattern must be a non-empty connected graph")
        else:
            raise PatternError(f"unknown pattern kind {self.kind!r}")

    @classmethod
    def cycle(cls, k: int) -> ForbiddenPattern:
        return cls("cycle", k)

    @classmethod
    def clique(cls, r: int) -> ForbiddenPattern:
        return cls("clique", r)

    @classmethod
    def custom(cls, g: AbstractGraph) -> ForbiddenPattern:
        return cls("custom", g.n, g)

    def as_graph(self) -> AbstractGraph:
        k = self.size
        if self.kind == "cycle":
            return AbstractGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
        if self.kind == "clique":
            return AbstractGraph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
        return self.graph

    @property
    def name(self) -> str:
        if self.kind == "cycle":
            return f"c{self.size}"
        if self.kind == "clique":
            return f"k{self.size}"
        return "custom:" + write_graph6(self.graph)


def parse_pattern(text: str) -> ForbiddenPattern:
    """``c<k>``, ``k<r>`` (``c3`` and ``k3`` are both the triangle) or ``custom:<file>``."""
    t = text.strip()
    if t.lower().startswith("custom:"):
        path = Path(t[7:])
        try:
            lines = [ln for ln in path.read_text().splitlines() if ln.strip()]
        except OSError as exc:
            raise PatternError(f"cannot read pattern file {path}: {exc}") from exc
        if len(lines) != 1:
            raise PatternError(f"pattern file {path} must hold exactly one graph6 line")
        return ForbiddenPattern.custom(read_graph6(lines[0].strip()))
    low = t.lower()
    if len(low) >= 2 and low[0] in "ck" and low[1:].isdigit():
        k = int(low[1:])
        return ForbiddenPattern.cycle(k) if low[0] == "c" else ForbiddenPattern.clique(k)
    raise PatternError(f"unrecognised pattern {text!r}; use c<k>, k<r> or custom:<path.g6>")


def find_cycle(masks: Sequence[int], k: int) -> list[int] | None:
    """A k-cycle as a vertex list, found by depth-capped DFS.

    Every cycle is rooted at its smallest vertex, so only larger vertices are
    visited below the root.
    """
    n = len(masks)
    if k > n:
        return None
    for s in range(n - k + 1):
        above = ~((1 << (s + 1)) - 1)
        if (masks[s] & above).bit_count() < 2:
            continue
        path = [s]

        def extend(v: int, used: int) -> bool:
            if len(path) == k:
                return bool(masks[v] >> s & 1)
            for u in iter_bits(masks[v] & above & ~used):
                path.append(u)
                if extend(u, used | (1 << u)):
                    return True
                path.pop()
            return False

        if extend(s, 1 << s):
            return path
    return None


def find_clique(masks: Sequence[int], r: int) -> list[int] | None:
    def grow(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == r:
            return chosen
        if cand.bit_count() < r - len(chosen):
            return None
        for v in iter_bits(cand):
            found = grow(chosen + [v], cand & masks[v] & ~((1 << (v + 1)) - 1))
            if found:
                return found
        return None

    return grow([], (1 << len(masks)) - 1)


def find_subgraph(masks: Sequence[int], pattern: AbstractGraph) -> list[int] | None:
    """Subgraph monomorphism by backtracking; returns pattern->graph vertex map."""
    n, p = len(masks), pattern.n
    if p > n:
        return None
    # BFS order on the (connected) pattern so each new vertex has a placed neighbour
    order = [max(range(p), key=pattern.degree)]
    seen = {order[0]}
    for v in order:
        for u in sorted(pattern.adjacency[v], key=lambda x: -pattern.degree(x)):
            if u not in seen:
                seen.add(u)
                order.append(u)
    back = [[order.index(u) for u in pattern.adjacency[v] if order.index(u) < i]
            for i, v in enumerate(order)]
    need = [pattern.degree(v) for v in order]
    image = [0] * p

    def place(i: int, used: int) -> bool:
        if i == p:
            return True
        cand = ((1 << n) - 1) & ~used
        for j in back[i]:
            cand &= masks[image[j]]
        for v in iter_bits(cand):
            if masks[v].bit_count() < need[i]:
                continue
            image[i] = v
            if place(i + 1, used | (1 << v)):
                return True
        return False

    if not place(0, 0):
        return None
    out = [0] * p
    for i, v in enumerate(order):
        out[v] = image[i]
    return out


def find_pattern(g: AbstractGraph | Sequence[int], p: ForbiddenPattern) -> list[int] | None:
    masks = g.masks if isinstance(g, AbstractGraph) else g
    if p.kind == "cycle":
        return find_cycle(masks, p.size)
    if p.kind == "clique":
        return find_clique(masks, p.size)
    return find_subgraph(masks, p.graph)


def contains_pattern(g: AbstractGraph, p: ForbiddenPattern, witness: bool = False):
    """True iff ``g`` has a subgraph isomorphic to ``p``.

    With ``witness=True`` returns ``(found, vertices)``; for cycles and cliques
    the vertices are listed in order, for custom patterns ``vertices[i]`` is
    the image of pattern vertex ``i``.
    """
    found = find_pattern(g, p)
    if witness:
        return found is not None, found
    return found is not None
