"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine the ordered partition to an
equitable one, individualise each vertex of the first smallest non-trivial
cell in turn, recurse.  Leaves are compared by the permuted adjacency rows
and the lexicographically largest wins.  Leaves that reproduce the first or
the current best leaf yield automorphisms, which prune sibling branches
lying in the same orbit of the pointwise stabiliser of the current prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import AbstractGraph
from .graph6 import write_graph6


@dataclass(frozen=True)
class CanonicalForm:
    labeling: tuple[int, ...]  # labeling[v] is the canonical name of v
    certificate: bytes


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                mv = masks[v]
                groups.setdefault(tuple((mv & cm).bit_count() for cm in cell_masks), []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not split:
            return cells


class _Search:
    def __init__(self, masks: Sequence[int]):
        self.masks = masks
        self.n = len(masks)
        self.best_key: tuple[int, ...] | None = None
        self.best_pos: list[int] | None = None
        self.first_key: tuple[int, ...] | None = None
        self.first_pos: list[int] | None = None
        self.generators: list[tuple[int, ...]] = []

    def _leaf(self, cells: list[list[int]]) -> None:
        pos = [0] * self.n
        for i, c in enumerate(cells):
            pos[c[0]] = i
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            m = self.masks[v]
            while m:
                low = m & -m
                r |= 1 << pos[low.bit_length() - 1]
                m ^= low
            rows[pos[v]] = r
        key = tuple(rows)
        if self.first_key is None:
            self.first_key, self.first_pos = key, pos
            self.best_key, self.best_pos = key, pos
            return
        if key == self.first_key:
            self._automorphism(self.first_pos, pos)
        elif key == self.best_key:
            self._automorphism(self.best_pos, pos)
        elif key > self.best_key:
            self.best_key, self.best_pos = key, pos

    def _automorphism(self, ref: list[int], pos: list[int]) -> None:
        inv = [0] * self.n
        for v, p in enumerate(ref):
            inv[p] = v
        gamma = tuple(inv[pos[v]] for v in range(self.n))
        if any(gamma[v] != v for v in range(self.n)):
            self.generators.append(gamma)

    def run(self, cells: list[list[int]], prefix: tuple[int, ...]) -> None:
        cells = _refine(self.masks, cells)
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1 and (target < 0 or len(c) < len(cells[target])):
                target = i
        if target < 0:
            self._leaf(cells)
            return
        explored: list[int] = []
        for w in cells[target]:
            if explored and _same_orbit(self._stabiliser(prefix), self.n, w, explored):
                continue
            explored.append(w)
            rest = [v for v in cells[target] if v != w]
            self.run(cells[:target] + [[w], rest] + cells[target + 1:], prefix + (w,))

    def _stabiliser(self, prefix: tuple[int, ...]) -> list[tuple[int, ...]]:
        return [g for g in self.generators if all(g[x] == x for x in prefix)]


def _same_orbit(gens: list[tuple[int, ...]], n: int, w: int, explored: list[int]) -> bool:
    if not gens:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[a] = b
    rw = find(w)
    return any(find(x) == rw for x in explored)


def orbits(gens: list[tuple[int, ...]], n: int) -> list[int]:
    """Orbit representative (smallest member) for each vertex."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_masks(
    masks: Sequence[int], colors: Sequence[int] | None = None
) -> tuple[list[int], tuple[int, ...], list[tuple[int, ...]]]:
    """Return ``(pos, rows, generators)`` for a bitmask graph.

    ``pos[v]`` is the canonical position of ``v``, ``rows`` the canonical
    adjacency rows and ``generators`` automorphisms found on the way (they
    generate the automorphism group of the coloured graph).
    """
    n = len(masks)
    if n == 0:
        return [], (), []
    if colors is None:
        cells = [list(range(n))]
    else:
        by_color: dict[int, list[int]] = {}
        for v in range(n):
            by_color.setdefault(colors[v], []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]
    s = _Search(masks)
    s.run(cells, ())
    return s.best_pos, s.best_key, s.generators


def canonical_form(g: AbstractGraph) -> CanonicalForm:
    pos, rows, _ = canonical_masks(g.masks)
    canon = AbstractGraph.from_masks(rows) if rows else g
    return CanonicalForm(tuple(pos), write_graph6(canon).encode("ascii"))


def canonical_graph6(g: AbstractGraph) -> str:
    return canonical_form(g).certificate.decode("ascii")


def automorphism_generators(g: AbstractGraph) -> list[tuple[int, ...]]:
    return canonical_masks(g.masks)[2]
