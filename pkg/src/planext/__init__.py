"""Extremal planar graphs: constructions, face-count audits and exact search."""

from __future__ import annotations

from .audit import AuditEntry, AuditReport, PatternPresentError, audit_c4, audit_c5
from .bounds import Bound, best_bound, bounds_for, edge_cap
from .canon import CanonicalForm, canonical_form, canonical_graph6
from .embedding import (
    EmbeddingError,
    Face,
    PlaneGraph,
    build_plane_graph,
    classify_edges,
    euler_check,
    face_profile,
    faces,
    reduce_k4_centers,
    reduce_prime,
)
from .graph import AbstractGraph, GraphError, degree_profile, graph_stats
from .graph6 import GraphFormatError, read_graph6, write_graph6
from .oracle import brute_force_oracle
from .patterns import ForbiddenPattern, contains_pattern, is_planar, parse_pattern
from .search import SearchConfig, SearchResult, extremal_search

__all__ = [
    "AbstractGraph", "AuditEntry", "AuditReport", "Bound", "CanonicalForm", "EmbeddingError",
    "Face", "ForbiddenPattern", "GraphError", "GraphFormatError", "PatternPresentError",
    "PlaneGraph", "SearchConfig", "SearchResult", "audit_c4", "audit_c5", "best_bound",
    "bounds_for", "brute_force_oracle", "build_plane_graph", "canonical_form",
    "canonical_graph6", "classify_edges", "contains_pattern", "degree_profile", "edge_cap",
    "euler_check", "extremal_search", "face_profile", "faces", "graph_stats", "is_planar",
    "parse_pattern", "read_graph6", "reduce_k4_centers", "reduce_prime", "write_graph6",
]
