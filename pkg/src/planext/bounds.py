"""Closed-form upper bounds on edge counts of planar H-free graphs, as exact rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .patterns import ForbiddenPattern, parse_pattern


@dataclass(frozen=True)
class Bound:
    name: str
    value: Fraction
    min_n: int

    @property
    def floor(self) -> int:
        return math.floor(self.value)


class BoundRangeError(ValueError):
    pass


def planar_bound(n: int) -> Fraction:
    """3n - 6 for n >= 3; all pairs below that."""
    return Fraction(3 * n - 6) if n >= 3 else Fraction(n * (n - 1) // 2)


def bounds_for(n: int, pattern: ForbiddenPattern) -> list[Bound]:
    """All proven bounds for ``pattern`` valid at ``n`` (possibly empty)."""
    out = []
    if n >= 3:
        out.append(Bound("3n-6", Fraction(3 * n - 6), 3))
    if pattern.kind in ("cycle", "clique") and pattern.size == 3 and n >= 3:
        out.append(Bound("2n-4", Fraction(2 * n - 4), 3))
    if pattern.kind == "cycle" and pattern.size == 4 and n >= 4:
        out.append(Bound("15/7(n-2)", Fraction(15, 7) * (n - 2), 4))
    if pattern.kind == "cycle" and pattern.size == 5:
        if n >= 5:
            out.append(Bound("12/5(n-2)", Fraction(12, 5) * (n - 2), 5))
        if n >= 11:
            out.append(Bound("(12n-33)/5", Fraction(12 * n - 33, 5), 11))
    return out


def best_bound(n: int, pattern: ForbiddenPattern) -> Bound | None:
    bs = bounds_for(n, pattern)
    return min(bs, key=lambda b: b.value) if bs else None


def edge_cap(n: int, pattern: ForbiddenPattern) -> int:
    """Integer upper bound on e(G) for planar H-free G on n vertices."""
    cap = n * (n - 1) // 2
    for b in bounds_for(n, pattern):
        cap = min(cap, b.floor)
    return cap


def named_bounds(n: int, pattern_name: str) -> list[Bound]:
    """Bounds for the four patterns the CLI reports on, with range checking.

    Returns the applicable bounds, tightest last.
    """
    p = parse_pattern(pattern_name)
    key = p.name
    if key in ("c3", "k3"):
        if n < 3:
            raise BoundRangeError("the 2n-4 bound needs n >= 3")
        return [Bound("2n-4", Fraction(2 * n - 4), 3)]
    if key == "k4":
        if n < 3:
            raise BoundRangeError("the 3n-6 bound needs n >= 3")
        return [Bound("3n-6", Fraction(3 * n - 6), 3)]
    if key == "c4":
        if n < 4:
            raise BoundRangeError("the 15/7(n-2) bound needs n >= 4")
        return [Bound("15/7(n-2)", Fraction(15, 7) * (n - 2), 4)]
    if key == "c5":
        if n < 5:
            raise BoundRangeError("the 12/5(n-2) bound needs n >= 5")
        out = [Bound("12/5(n-2)", Fraction(12, 5) * (n - 2), 5)]
        if n >= 11:
            out.append(Bound("(12n-33)/5", Fraction(12 * n - 33, 5), 11))
        return out
    raise BoundRangeError(f"no closed-form bound for pattern {pattern_name!r}; use c3, c4, c5 or k4")
