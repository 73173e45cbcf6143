"""Exact ex(n, H) by canonical augmentation over planar H-free graphs.

Graphs are grown one vertex at a time from K1.  A child (parent plus a new
vertex joined to a set S) is kept only if

* S is the smallest member of its orbit under the parent's automorphisms, and
* the new vertex is, up to automorphism, the canonical deletion vertex of
  the child: among vertices whose removal keeps the graph connected (all
  vertices when disconnected graphs are allowed), minimum degree, then the
  largest sorted neighbour-degree tuple, then the largest canonical label.

This generates every isomorphism class of (connected) planar H-free graph
exactly once.  Planarity and H-freeness are both inherited by subgraphs,
so violating children are dropped with their whole subtree.  H-freeness
is tested incrementally: a forbidden cycle through the new vertex is a
path of the right length in the parent between two members of S.

The canonical deletion vertex never has degree above 5 (a planar graph always
has a non-cut vertex of degree at most 5), which gives the completion bound
used for pruning: a node on m vertices with e edges can reach at most
e + sum_{t=m+1..n} min(t-1, 5) edges, and never more than the proven
closed-form bound for H.

Parallel runs split the tree at a fixed depth.  Every subtree is searched
independently starting from the same deterministic lower bound, so node
counts and results do not depend on the number of workers.
"""

from __future__ import annotations

import bisect
import logging
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .bounds import best_bound, edge_cap
from .canon import canonical_masks, orbits
from .graph import AbstractGraph, iter_bits
from .graph6 import write_graph6
from .patterns import ForbiddenPattern, find_clique, find_pattern, find_subgraph
from .planarity import planar_masks

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
MAX_NEW_DEGREE = 5


class SearchError(ValueError):
    pass


class _Timeout(Exception):
    pass


@dataclass(frozen=True)
class SearchConfig:
    n: int
    pattern: ForbiddenPattern | None
    connected_only: bool = True
    max_seconds: float | None = None
    workers: int = 1
    witness_cap: int = 100
    restrict_2c_mindeg3: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise SearchError(f"n must be at least 1, got {self.n}")
        if self.workers < 1:
            raise SearchError(f"workers must be at least 1, got {self.workers}")
        if self.witness_cap < 0:
            raise SearchError("witness cap must be non-negative")


@dataclass
class SearchResult:
    n: int
    pattern: str
    connected_only: bool
    restricted: bool
    max_edges: int | None
    witness_count: int
    witnesses: list[str]
    witness_cap: int
    witnesses_truncated: bool
    nodes_explored: int
    elapsed_seconds: float
    complete: bool
    schema_version: int = field(default=SCHEMA_VERSION)

    def to_json(self, deterministic: bool = False) -> dict:
        out = asdict(self)
        if deterministic:
            out["elapsed_seconds"] = 0.0
        return out


# ---------------------------------------------------------------------------
# incremental pattern tests


def _path_masks(masks: Sequence[int], length: int) -> list[int]:
    """out[a] has bit b iff some simple path a..b has exactly ``length`` edges."""
    n = len(masks)
    out = [0] * n
    for a in range(n):
        acc = 0

        def walk(v: int, used: int, left: int) -> None:
            nonlocal acc
            if left == 0:
                acc |= 1 << v
                return
            for u in iter_bits(masks[v] & ~used):
                walk(u, used | (1 << u), left - 1)

        walk(a, 1 << a, length)
        out[a] = acc
    return out


def _path_masks_3(masks: Sequence[int]) -> list[int]:
    out = []
    for a, ma in enumerate(masks):
        acc = 0
        for x in iter_bits(ma):
            skip = (1 << a) | (1 << x)
            for y in iter_bits(masks[x] & ~(1 << a)):
                acc |= masks[y] & ~skip
        out.append(acc)
    return out


class _Checker:
    """Decides whether joining a new vertex to S (grown one element at a time) creates H."""

    def prepare(self, masks: Sequence[int]):
        return masks

    def ok_add(self, ctx, masks: Sequence[int], s_mask: int, s: int) -> bool:
        return True


class _CycleChecker(_Checker):
    def __init__(self, k: int):
        self.k = k

    def prepare(self, masks):
        if self.k == 3:
            return masks
        if self.k == 5:
            return _path_masks_3(masks)
        return _path_masks(masks, self.k - 2)

    def ok_add(self, ctx, masks, s_mask, s):
        return not ctx[s] & s_mask


class _CliqueChecker(_Checker):
    def __init__(self, r: int):
        self.r = r

    def ok_add(self, ctx, masks, s_mask, s):
        common = masks[s] & s_mask
        need = self.r - 2
        if common.bit_count() < need:
            return True
        if need == 1:
            return not common
        if need == 2:
            return not any(masks[t] & common for t in iter_bits(common))
        sub = [masks[t] & common if common >> t & 1 else 0 for t in range(len(masks))]
        return find_clique(sub, need) is None


class _CustomChecker(_Checker):
    def __init__(self, g: AbstractGraph):
        self.g = g

    def ok_add(self, ctx, masks, s_mask, s):
        v = len(masks)
        nbrs = s_mask | (1 << s)
        child = [m | (1 << v) if nbrs >> u & 1 else m for u, m in enumerate(masks)]
        child.append(nbrs)
        return find_subgraph(child, self.g) is None


def _checker(p: ForbiddenPattern | None) -> _Checker:
    if p is None:
        return _Checker()
    if p.kind == "cycle":
        return _CycleChecker(p.size)
    if p.kind == "clique":
        return _CliqueChecker(p.size)
    return _CustomChecker(p.graph)


# ---------------------------------------------------------------------------
# helpers on bitmask graphs


def _is_cut(masks: Sequence[int], u: int, full: int) -> bool:
    rest = full & ~(1 << u)
    if not rest:
        return False
    seen = rest & -rest
    frontier = seen
    while frontier:
        nb = 0
        for x in iter_bits(frontier):
            nb |= masks[x]
        nb &= rest & ~seen
        seen |= nb
        frontier = nb
    return seen != rest


def _orbit_min(s_mask: int, gens: list[tuple[int, ...]]) -> bool:
    seen = {s_mask}
    stack = [s_mask]
    while stack:
        x = stack.pop()
        for g in gens:
            y = 0
            for i in iter_bits(x):
                y |= 1 << g[i]
            if y < s_mask:
                return False
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


def _two_connected_mindeg3(masks: Sequence[int]) -> bool:
    n = len(masks)
    if n < 3 or min(m.bit_count() for m in masks) < 3:
        return False
    full = (1 << n) - 1
    if not _connected(masks, full):
        return False
    return not any(_is_cut(masks, u, full) for u in range(n))


def _connected(masks: Sequence[int], full: int) -> bool:
    seen = full & -full
    frontier = seen
    while frontier:
        nb = 0
        for x in iter_bits(frontier):
            nb |= masks[x]
        nb &= full & ~seen
        seen |= nb
        frontier = nb
    return seen == full


def _g6(rows: Sequence[int]) -> str:
    return write_graph6(AbstractGraph.from_masks(rows))


# ---------------------------------------------------------------------------
# the engine


class _Engine:
    def __init__(
        self,
        n: int,
        pattern: ForbiddenPattern | None,
        connected_only: bool,
        restricted: bool,
        witness_cap: int,
        deadline: float | None,
        seed: int,
    ):
        self.n = n
        self.checker = _checker(pattern)
        self.connected_only = connected_only
        self.restricted = restricted
        self.cap_w = witness_cap
        self.deadline = deadline
        self.best = seed
        self.found: int | None = None
        self.witnesses: list[str] = []
        self.count = 0
        self.nodes = 0
        if pattern is not None:
            # capping the completion estimate by a proven bound cannot hide a counterexample:
            # nodes are cut only when their estimate is below the best found, and the best
            # stays at or under the cap until a graph beating the cap has been recorded
            self.cap = edge_cap(n, pattern)
        else:
            self.cap = 3 * n - 6 if n >= 3 else n * (n - 1) // 2
        # rest[m] = most edges the vertices m+1..n can still add
        self.rest = [sum(min(t - 1, MAX_NEW_DEGREE) for t in range(m + 1, n + 1)) for m in range(n + 1)]

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 63 and time.time() > self.deadline:
            raise _Timeout

    def _record(self, masks: Sequence[int], e: int, rows: tuple[int, ...] | None) -> None:
        if e < self.best:
            return
        if self.restricted and not _two_connected_mindeg3(masks):
            return
        if rows is None:
            rows = canonical_masks(masks)[1]
        g6 = _g6(rows)
        if self.found is None or e > self.found:
            self.found = e
            self.witnesses = []
            self.count = 0
        self.best = max(self.best, e)
        self.count += 1
        i = bisect.bisect_left(self.witnesses, g6)
        if i < self.cap_w:
            self.witnesses.insert(i, g6)
            del self.witnesses[self.cap_w:]

    def children(self, masks: tuple[int, ...], e: int, dmin: int | None = None):
        """Yield accepted children ``(child_masks, child_e, canonical_rows_or_None)``."""
        m = len(masks)
        if dmin is None:
            dmin = self.best - e - self.rest[m + 1]
        dmin = max(dmin, 1 if self.connected_only else 0)
        dmax = min(MAX_NEW_DEGREE, m)
        if dmin > dmax:
            return
        gens = canonical_masks(masks)[2] if m > 1 else []
        ctx = self.checker.prepare(masks)
        deg = [x.bit_count() for x in masks]
        full = (1 << (m + 1)) - 1
        ok_add = self.checker.ok_add

        stack = [(0, 0, 0)]  # (next candidate, S, |S|)
        while stack:
            start, s_mask, size = stack.pop()
            if size < dmax:
                for s in range(m - 1, start - 1, -1):
                    if ok_add(ctx, masks, s_mask, s):
                        stack.append((s + 1, s_mask | (1 << s), size + 1))
            if size < dmin:
                continue
            got = self._child(masks, e, s_mask, size, deg, gens, full)
            if got is not None:
                yield got

    def _child(self, masks, e, s_mask, d, deg, gens, full):
        m = len(masks)
        v = m
        vbit = 1 << v
        child = list(masks)
        dc = list(deg)
        for s in iter_bits(s_mask):
            child[s] |= vbit
            dc[s] += 1
        child.append(s_mask)
        dc.append(d)
        if self.connected_only:
            for u in range(m):
                if dc[u] < d and not _is_cut(child, u, full):
                    return None
            ties = [u for u in range(m) if dc[u] == d and not _is_cut(child, u, full)]
        else:
            if any(dc[u] < d for u in range(m)):
                return None
            ties = [u for u in range(m) if dc[u] == d]
        if gens and not _orbit_min(s_mask, gens):
            return None
        if not planar_masks(child):
            return None
        rows = None
        if ties:
            ties.append(v)

            def key(u: int) -> tuple[int, ...]:
                return tuple(sorted(dc[x] for x in iter_bits(child[u])))

            top = max(key(u) for u in ties)
            ties = [u for u in ties if key(u) == top]
            if v not in ties:
                return None
            if len(ties) > 1:
                pos, rows, cgens = canonical_masks(child)
                w = max(ties, key=lambda u: pos[u])
                if w != v:
                    orb = orbits(cgens, m + 1)
                    if orb[w] != orb[v]:
                        return None
        return tuple(child), e + d, rows

    def expand(self, masks: tuple[int, ...], e: int, rows=None) -> None:
        self._tick()
        m = len(masks)
        if m == self.n:
            self._record(masks, e, rows)
            return
        if min(e + self.rest[m], self.cap) < self.best:
            return
        for child, ce, crows in self.children(masks, e):
            self.expand(child, ce, crows)


# ---------------------------------------------------------------------------
# lower bound seed and driver


def _greedy_lower_bound(n: int, pattern: ForbiddenPattern, trials: int = 24) -> int:
    """Edges of the best random maximal planar H-free graph (fixed seeds)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    best = 0
    for t in range(trials):
        rng = random.Random(t)
        order = pairs[:]
        rng.shuffle(order)
        masks = [0] * n
        e = 0
        for u, v in order:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            if find_pattern(masks, pattern) is None and planar_masks(masks):
                e += 1
            else:
                masks[u] &= ~(1 << v)
                masks[v] &= ~(1 << u)
        best = max(best, e)
    return best


def split_depth(n: int) -> int:
    return max(1, n - 2)


@dataclass
class _TaskResult:
    found: int | None
    count: int
    witnesses: list[str]
    nodes: int
    complete: bool


def _run_task(args) -> _TaskResult:
    masks, e, n, pattern, connected_only, restricted, cap_w, deadline, seed = args
    eng = _Engine(n, pattern, connected_only, restricted, cap_w, deadline, seed)
    complete = True
    try:
        eng.expand(masks, e)
    except _Timeout:
        complete = False
    return _TaskResult(eng.found, eng.count, eng.witnesses, eng.nodes, complete)


def _frontier(eng: _Engine, depth: int) -> list[tuple[tuple[int, ...], int]]:
    level = [((0,), 0)]
    for _ in range(1, depth):
        nxt = []
        for masks, e in level:
            eng._tick()
            if min(e + eng.rest[len(masks)], eng.cap) < eng.best:
                continue
            nxt.extend((c, ce) for c, ce, _ in eng.children(masks, e))
        level = nxt
    return level


def extremal_search(cfg: SearchConfig, progress: Callable[[str], None] | None = None) -> SearchResult:
    start = time.time()
    deadline = start + cfg.max_seconds if cfg.max_seconds is not None else None
    p = cfg.pattern
    seed = 0
    if not cfg.restrict_2c_mindeg3 and p is not None and p.kind in ("cycle", "clique"):
        # cycles and cliques are 2-connected, so joining components by bridges
        # keeps a greedy graph H-free and planar: the seed is valid for connected runs too
        seed = _greedy_lower_bound(cfg.n, p)
    name = p.name if p is not None else "none"
    eng = _Engine(cfg.n, p, cfg.connected_only, cfg.restrict_2c_mindeg3, cfg.witness_cap, deadline, seed)

    complete = True
    tasks: list[tuple[tuple[int, ...], int]] = []
    try:
        tasks = _frontier(eng, split_depth(cfg.n))
    except _Timeout:
        complete = False
    prefix_nodes = eng.nodes
    tasks.sort(key=lambda t: (_g6(canonical_masks(t[0])[1]), t[1]))
    args = [
        (m, e, cfg.n, p, cfg.connected_only, cfg.restrict_2c_mindeg3, cfg.witness_cap, deadline, seed)
        for m, e in tasks
    ]
    results: list[_TaskResult] = []
    if complete:
        if cfg.workers == 1 or len(args) <= 1:
            results = [_run_task(a) for a in args]
        else:
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                for i, r in enumerate(pool.map(_run_task, args, chunksize=1), 1):
                    results.append(r)
                    if progress and (i % max(1, len(args) // 20) == 0 or i == len(args)):
                        progress(f"search n={cfg.n} {name}: {i}/{len(args)} subtrees")
        if progress and cfg.workers == 1:
            progress(f"search n={cfg.n} {name}: {len(args)}/{len(args)} subtrees")

    found = [r.found for r in results if r.found is not None]
    best = max(found) if found else None
    witnesses: list[str] = []
    count = 0
    for r in results:
        if r.found is not None and r.found == best:
            count += r.count
            witnesses.extend(r.witnesses)
    witnesses = sorted(set(witnesses))
    nodes = prefix_nodes + sum(r.nodes for r in results)
    complete = complete and all(r.complete for r in results)
    if not complete and seed > (best or 0):
        # a partial run still certifies the greedy graph as a lower bound
        best = seed
    return SearchResult(
        n=cfg.n,
        pattern=name,
        connected_only=cfg.connected_only,
        restricted=cfg.restrict_2c_mindeg3,
        max_edges=best,
        witness_count=count,
        witnesses=witnesses[: cfg.witness_cap],
        witness_cap=cfg.witness_cap,
        witnesses_truncated=count > cfg.witness_cap,
        nodes_explored=nodes,
        elapsed_seconds=round(time.time() - start, 3),
        complete=complete,
    )


def census(n: int, pattern: ForbiddenPattern | None, connected_only: bool = True) -> tuple[int, int]:
    """(number of isomorphism classes, maximum edge count) of planar H-free graphs on n vertices.

    Walks the augmentation tree with every bound-based cut disabled, so it
    checks the generator against known enumerations and the pruned search
    against an unpruned one.
    """
    eng = _Engine(n, pattern, connected_only, False, 0, None, 0)
    eng.best = -1
    total, top = 0, -1

    def walk(masks, e):
        nonlocal total, top
        if len(masks) == n:
            total += 1
            top = max(top, e)
            return
        for c, ce, _ in eng.children(masks, e, dmin=0):
            walk(c, ce)

    walk((0,), 0)
    return total, top


def count_graphs(n: int, pattern: ForbiddenPattern | None, connected_only: bool = True) -> int:
    """Number of isomorphism classes of (connected) planar H-free graphs on n vertices."""
    return census(n, pattern, connected_only)[0]


@dataclass(frozen=True)
class BoundCheck:
    n: int
    ex: int | None
    bound: Fraction
    holds: bool
    tight: bool
    complete: bool


def verify_bound(
    ns: Sequence[int],
    pattern: ForbiddenPattern,
    bound: Callable[[int], Fraction] | None = None,
    strict: bool = False,
    **kwargs,
) -> list[BoundCheck]:
    """Compare exact ex(n, H) with a closed form for every n in ``ns``.

    ``bound`` defaults to the tightest proven bound for ``pattern``.  With
    ``strict`` the comparison is ex < bound.
    """
    out = []
    for n in ns:
        if bound is not None:
            b = Fraction(bound(n))
        else:
            bb = best_bound(n, pattern)
            if bb is None:
                raise SearchError(f"no closed-form bound for {pattern.name} at n={n}")
            b = bb.value
        res = extremal_search(SearchConfig(n, pattern, **kwargs))
        if not res.complete:
            raise SearchError(f"search for n={n} exhausted its budget")
        ex = res.max_edges
        holds = ex < b if strict else ex <= b
        out.append(BoundCheck(n, ex, b, holds, ex == b, res.complete))
    return out


def default_workers() -> int:
    env = os.environ.get("PLANEXT_WORKERS")
    if env:
        try:
            w = int(env)
        except ValueError:
            raise SearchError(f"PLANEXT_WORKERS must be an integer, got {env!r}") from None
        if w < 1:
            raise SearchError("PLANEXT_WORKERS must be at least 1")
        return w
    return 1
