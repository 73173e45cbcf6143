"""Command-line front end.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input
error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import audit as audit_mod
from .bounds import BoundRangeError, named_bounds
from .constructions import basic, c4, c5, triangulations
from .embedding import EmbeddingError, PlaneGraph, euler_check, face_profile, reduce_k4_centers, reduce_prime
from .io import InputError, read_input, render
from .patterns import PatternError, contains_pattern, parse_pattern
from .search import SearchConfig, SearchError, default_workers, extremal_search

OK, VIOLATION, USAGE, BUDGET = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _need(args, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise _Usage(f"--{name} is required for this family")
    return value


FAMILIES: dict[str, Callable[[argparse.Namespace], PlaneGraph]] = {
    "icosidodecahedron": lambda a: c4.icosidodecahedron(),
    "c4-family": lambda a: c4.c4_family(_need(a, "k")),
    "complete-bipartite-2": lambda a: basic.complete_bipartite_2(_need(a, "n")),
    "double-wheel": lambda a: basic.double_wheel(_need(a, "n")),
    "triangulation-t": lambda a: triangulations.triangulation_T(_need(a, "k")),
    "grown-triangulation": lambda a: triangulations.grow_triangulation(
        triangulations.triangulation_T(_need(a, "k"))
    ),
    "c5-family": lambda a: c5.c5_family(_need(a, "k")),
    "figure5": lambda a: basic.figure5_graph(),
    "figure8": lambda a: basic.figure8_graph(),
    "diamond-holder": lambda a: c5.diamond_holder().graph,
    "snowflake": lambda a: c5.snowflake().graph,
    "diamond": lambda a: basic.diamond(),
    "tetrahedron": lambda a: basic.tetrahedron(),
}


def _profile_text(pg: PlaneGraph) -> str:
    if not euler_check(pg):
        return "faces: embedding fails Euler check"
    fp = face_profile(pg)
    parts = " ".join(f"{i}^{c}" for i, c in fp.f_i.items())
    return f"f={fp.f} sizes {parts}"


def _write(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    try:
        pg = FAMILIES[args.family](args)
    except (ValueError, RecursionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    summary = f"n={pg.n} e={pg.edge_count} {_profile_text(pg)}"
    _write(render(pg, args.format), args.out)
    print(summary, file=sys.stdout if args.out else sys.stderr)
    return OK


def _load_plane(path: str, fmt: str | None) -> PlaneGraph:
    obj = read_input(path, fmt)
    if not isinstance(obj, PlaneGraph):
        raise InputError(f"{path}: an embedding (JSON with \"rotation\") is required")
    return obj


def cmd_check(args) -> int:
    obj = read_input(args.input, args.format)
    pattern = parse_pattern(args.free)
    g = obj.underlying if isinstance(obj, PlaneGraph) else obj
    status = OK
    if args.embedding:
        if not isinstance(obj, PlaneGraph):
            raise InputError("--embedding needs an embedding JSON input")
        if euler_check(obj):
            print(f"euler: ok (n={obj.n} e={obj.edge_count} f={len(obj.face_list)})")
        else:
            print(f"euler: FAILED (n={obj.n} e={obj.edge_count} f={len(obj.face_list)})")
            status = VIOLATION
    found, witness = contains_pattern(g, pattern, witness=True)
    if found:
        print(f"{pattern.name}: found, witness {' '.join(map(str, witness))}")
        status = VIOLATION
    else:
        print(f"{pattern.name}: free")
    return status


def cmd_audit(args) -> int:
    pg = _load_plane(args.input, args.format)
    fn = {"c4": audit_mod.audit_c4, "c5": audit_mod.audit_c5}[args.forbid]
    try:
        report = fn(pg)
    except audit_mod.PatternPresentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(f"audit {report.pattern}: n={pg.n} e={pg.edge_count}")
        for e in report.entries:
            if not e.applicable:
                print(f"  ({e.id}) {e.description:<48} n/a: {e.note}")
                continue
            verdict = "holds" if e.holds else "FAILS"
            tight = " tight" if e.tight else ""
            print(f"  ({e.id}) {e.description:<48} {e.lhs} {e.relation} {e.rhs}  {verdict}{tight}")
    return OK if report.ok else VIOLATION


def cmd_reduce(args) -> int:
    pg = _load_plane(args.input, args.format)
    if not euler_check(pg):
        raise InputError("input embedding fails the Euler check")
    out = reduce_prime(pg) if args.mode == "prime" else reduce_k4_centers(pg)
    print(f"before: n={pg.n} e={pg.edge_count}")
    print(f"after:  n={out.n} e={out.edge_count}")
    if out.n == pg.n and out.rotation == pg.rotation:
        print("unchanged")
    if args.mode == "prime":
        limit = 2 * out.n - 4
        verdict = "holds" if out.edge_count <= limit else "does not hold"
        print(f"e(G') <= 2|G'|-4: {out.edge_count} <= {limit} {verdict}")
    if args.out:
        _write(render(out, "json"), args.out)
    return OK


def _read_config(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc
    out = {}
    for i, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"{path}:{i}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in ("workers", "budget"):
            raise InputError(f"{path}:{i}: unknown key {key!r} (only workers and budget may be set)")
        out[key] = value
    return out


def cmd_search(args) -> int:
    conf = _read_config(args.config)
    try:
        workers = args.workers or (int(conf["workers"]) if "workers" in conf else default_workers())
        budget = args.budget if args.budget is not None else (float(conf["budget"]) if "budget" in conf else None)
    except ValueError as exc:
        raise InputError(f"bad workers/budget setting: {exc}") from exc
    cfg = SearchConfig(
        n=args.n,
        pattern=parse_pattern(args.forbid),
        connected_only=not args.all_graphs,
        max_seconds=budget,
        workers=workers,
        witness_cap=args.witness_cap,
        restrict_2c_mindeg3=args.restrict_2c_mindeg3,
    )
    res = extremal_search(cfg, progress=lambda msg: print(msg, file=sys.stderr))
    if args.json:
        print(json.dumps(res.to_json(args.deterministic), indent=2, sort_keys=True))
    else:
        scope = "connected " if cfg.connected_only else ""
        if cfg.restrict_2c_mindeg3:
            scope += "2-connected min-degree-3 restricted "
        status = "" if res.complete else " (INCOMPLETE: budget exhausted, lower bound only)"
        rel = "=" if res.complete else ">="
        print(f"ex{rel}{res.max_edges} for {scope}planar {res.pattern}-free graphs on n={res.n}{status}")
        print(f"witnesses: {res.witness_count}" + (" (truncated)" if res.witnesses_truncated else ""))
        for w in res.witnesses:
            print(f"  {w}")
        elapsed = 0.0 if args.deterministic else res.elapsed_seconds
        print(f"nodes explored: {res.nodes_explored}, elapsed {elapsed}s")
    return OK if res.complete else BUDGET


def cmd_bounds(args) -> int:
    try:
        bounds = named_bounds(args.n, args.forbid)
    except BoundRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    for b in bounds:
        v = b.value
        print(f"{b.name} at n={args.n}: {v.numerator}/{v.denominator} (floor {b.floor})")
    if args.forbid == "c5" and args.n < 11:
        print("(12n-33)/5 applies only for n >= 11; not yet applicable")
    if len(bounds) > 1:
        best = min(bounds, key=lambda b: b.value)
        print(f"tightest: {best.name}, floor {best.floor}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planext", description="Extremal planar graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named construction")
    c.add_argument("family", choices=sorted(FAMILIES))
    c.add_argument("--k", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--format", choices=["json", "g6", "dot"], default="json")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", help="test a graph for a forbidden pattern")
    c.add_argument("--input", required=True)
    c.add_argument("--free", required=True, help="c4, c5, k3, k4 or custom:<file.g6>")
    c.add_argument("--embedding", action="store_true", help="also require a valid plane embedding")
    c.add_argument("--format", choices=["json", "g6"])
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("audit", help="evaluate the face-counting inequalities")
    c.add_argument("--input", required=True)
    c.add_argument("--forbid", required=True, choices=["c4", "c5"])
    c.add_argument("--json", action="store_true")
    c.add_argument("--format", choices=["json"])
    c.set_defaults(func=cmd_audit)

    c = sub.add_parser("reduce", help="apply a reduction to an embedding")
    c.add_argument("--input", required=True)
    c.add_argument("--mode", required=True, choices=["prime", "k4centers"])
    c.add_argument("--out")
    c.add_argument("--format", choices=["json"])
    c.set_defaults(func=cmd_reduce)

    c = sub.add_parser("search", help="exact ex(n, H) by exhaustive search")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--forbid", required=True)
    c.add_argument("--workers", type=int)
    c.add_argument("--budget", type=float, help="seconds")
    c.add_argument("--json", action="store_true")
    c.add_argument("--deterministic", action="store_true", help="zero timing fields")
    c.add_argument("--all-graphs", action="store_true", help="include disconnected graphs")
    c.add_argument("--witness-cap", type=int, default=100)
    c.add_argument("--restrict-2c-mindeg3", action="store_true",
                   help="only count 2-connected graphs of minimum degree 3")
    c.add_argument("--config", help="key=value file with workers/budget defaults")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("bounds", help="closed-form upper bounds")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--forbid", required=True, choices=["c3", "c4", "c5", "k4"])
    c.set_defaults(func=cmd_bounds)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (_Usage, InputError, PatternError, SearchError, EmbeddingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
