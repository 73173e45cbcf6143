"""File formats: graph6, adjacency/embedding JSON, DOT export."""

from __future__ import annotations

import json
from pathlib import Path

from .embedding import EmbeddingError, PlaneGraph, embedding_from_json
from .graph import AbstractGraph, GraphError
from .graph6 import GraphFormatError, read_graph6, write_graph6

SCHEMA_VERSION = 1


class InputError(ValueError):
    pass


def graph_to_json(g: AbstractGraph) -> dict:
    return {"schema_version": SCHEMA_VERSION, "n": g.n, "adjacency": [sorted(s) for s in g.adjacency]}


def plane_to_json(pg: PlaneGraph) -> dict:
    return {"schema_version": SCHEMA_VERSION, **pg.to_json()}


def graph_from_json(data) -> AbstractGraph | PlaneGraph:
    """Embedding JSON (has "rotation") or adjacency JSON (has "adjacency")."""
    if isinstance(data, dict) and "rotation" in data:
        return embedding_from_json(data)
    if isinstance(data, dict) and "adjacency" in data:
        n, adj = data.get("n"), data["adjacency"]
        if not isinstance(n, int) or not isinstance(adj, list) or len(adj) != n:
            raise InputError('adjacency JSON needs integer "n" and a list of n neighbor lists')
        edges = []
        for v, row in enumerate(adj):
            if not isinstance(row, list) or not all(isinstance(u, int) for u in row):
                raise InputError(f"vertex {v}: neighbor list must hold integers")
            edges += [(v, u) for u in row]
        g = AbstractGraph.from_edges(n, edges)
        for v, row in enumerate(adj):
            if set(row) != g.adjacency[v] or len(row) != len(set(row)):
                raise InputError(f"vertex {v}: adjacency is not symmetric or has duplicates")
        return g
    raise InputError('JSON must contain "rotation" (embedding) or "adjacency"')


def to_dot(g: AbstractGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n) if not g.adjacency[v]]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def infer_format(path: str | Path, override: str | None = None) -> str:
    if override:
        return override
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "g6"
    if suffix == ".json":
        return "json"
    if suffix == ".dot":
        raise InputError("DOT is an export-only format; give a .g6 or .json input")
    raise InputError(f"cannot infer input format from {str(path)!r}; use --format g6|json")


def read_input(path: str | Path, fmt: str | None = None) -> AbstractGraph | PlaneGraph:
    kind = infer_format(path, fmt)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        if kind == "g6":
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) != 1:
                raise InputError(f"{path}: expected exactly one graph6 line, found {len(lines)}")
            return read_graph6(lines[0].strip())
        if kind == "json":
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise InputError(f"{path}: malformed JSON: {exc}") from exc
            return graph_from_json(data)
    except (GraphFormatError, EmbeddingError, GraphError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    raise InputError(f"unsupported input format {kind!r}")


def render(obj: AbstractGraph | PlaneGraph, fmt: str) -> str:
    g = obj.underlying if isinstance(obj, PlaneGraph) else obj
    if fmt == "g6":
        return write_graph6(g) + "\n"
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        data = plane_to_json(obj) if isinstance(obj, PlaneGraph) else graph_to_json(g)
        return json.dumps(data) + "\n"
    raise InputError(f"unknown output format {fmt!r}")
