"""Brute-force ex(n, H) over labelled graphs, for cross-checking the search.

Edge subsets are scanned from the largest size down and the first size with
a planar H-free member is the answer.  Planarity goes through networkx and
pattern tests through the generic DFS detectors; nothing here is shared
with the augmentation search.
"""

from __future__ import annotations

from itertools import combinations

from .graph import AbstractGraph
from .patterns import ForbiddenPattern, find_pattern
from .planarity import is_planar

MAX_N = 7


def brute_force_oracle(n: int, pattern: ForbiddenPattern) -> int:
    if n > MAX_N:
        raise ValueError(f"brute force is limited to n <= {MAX_N}, got {n}")
    if n < 1:
        raise ValueError("n must be positive")
    pairs = list(combinations(range(n), 2))
    bits = [((1 << u), (1 << v)) for u, v in pairs]
    for k in range(len(pairs), -1, -1):
        for chosen in combinations(range(len(pairs)), k):
            masks = [0] * n
            for i in chosen:
                u, v = pairs[i]
                bu, bv = bits[i]
                masks[u] |= bv
                masks[v] |= bu
            if find_pattern(masks, pattern) is not None:
                continue
            if is_planar(AbstractGraph.from_masks(masks)).planar:
                return k
    return 0
