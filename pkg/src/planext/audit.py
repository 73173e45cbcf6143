"""Evaluate the face-counting inequalities behind the C4 and C5 bounds on a plane graph.

Every quantity is an exact rational.  An entry whose hypotheses (minimum
degree, 2-connectivity) fail on the input is reported as inapplicable rather
than evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .embedding import EmbeddingError, PlaneGraph, classify_edges, euler_check, face_profile, reduce_prime
from .graph import degree_profile, graph_stats, is_connected
from .patterns import ForbiddenPattern, contains_pattern


class PatternPresentError(ValueError):
    pass


@dataclass(frozen=True)
class AuditEntry:
    id: str
    description: str
    lhs: Fraction
    rhs: Fraction
    relation: str  # "<=", ">=" or "="
    applicable: bool = True
    note: str = ""

    @property
    def holds(self) -> bool:
        if self.relation == "<=":
            return self.lhs <= self.rhs
        if self.relation == ">=":
            return self.lhs >= self.rhs
        return self.lhs == self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "relation": self.relation,
            "applicable": self.applicable,
            "holds": self.holds if self.applicable else None,
            "tight": self.tight if self.applicable else None,
            "note": self.note,
        }


@dataclass
class AuditReport:
    pattern: str
    entries: list[AuditEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.holds for e in self.entries if e.applicable)

    def entry(self, id_: str) -> AuditEntry:
        return next(e for e in self.entries if e.id == id_)

    def to_json(self) -> dict:
        return {"pattern": self.pattern, "ok": self.ok, "entries": [e.to_json() for e in self.entries]}


def _inapplicable(id_: str, description: str, relation: str, why: str) -> AuditEntry:
    return AuditEntry(id_, description, Fraction(0), Fraction(0), relation, False, why)


def _check_input(pg: PlaneGraph, k: int, min_n: int) -> None:
    if not euler_check(pg):
        raise EmbeddingError("embedding fails the Euler check")
    if not is_connected(pg.underlying):
        # the face-count inequalities are stated for a single connected plane graph
        raise EmbeddingError("audit needs a connected plane graph")
    if pg.n < min_n:
        raise ValueError(f"audit needs n >= {min_n}, got {pg.n}")
    found, cyc = contains_pattern(pg.underlying, ForbiddenPattern.cycle(k), witness=True)
    if found:
        raise PatternPresentError(f"graph contains a {k}-cycle {cyc}; the audit assumes C{k}-freeness")


def audit_c4(pg: PlaneGraph) -> AuditReport:
    _check_input(pg, 4, 4)
    fp = face_profile(pg)
    n, e, f, f3 = pg.n, pg.edge_count, fp.f, fp.count(3)
    F = Fraction
    return AuditReport("c4", [
        AuditEntry("a", "f <= 2(e + f3)/5", F(f), F(2 * (e + f3), 5), "<="),
        AuditEntry("b", "f3 <= e/3", F(f3), F(e, 3), "<="),
        AuditEntry("c", "f <= 8e/15", F(f), F(8 * e, 15), "<="),
        AuditEntry("d", "e <= 15(n-2)/7", F(e), F(15 * (n - 2), 7), "<="),
    ])


def audit_c5(pg: PlaneGraph) -> AuditReport:
    _check_input(pg, 5, 5)
    F = Fraction
    g = pg.underlying
    n, e = g.n, g.edge_count
    fp = face_profile(pg)
    ec = classify_edges(pg)
    f3, f4, f5 = fp.count(3), fp.count(4), fp.count(5)
    e3 = ec.e(3)
    delta = degree_profile(g).min_degree or 0
    two_connected = graph_stats(g).vertex_connectivity_at_least_2
    report = AuditReport("c5")
    add = report.entries.append

    add(AuditEntry("a", "f3 <= e3/2", F(f3), F(e3, 2), "<="))
    if delta >= 3:
        add(AuditEntry("b", "f4 <= (e - e3)/2", F(f4), F(e - e3, 2), "<="))
        add(AuditEntry("c", "f5 = 0", F(f5), F(0), "="))
    else:
        add(_inapplicable("b", "f4 <= (e - e3)/2", "<=", f"minimum degree {delta} < 3"))
        add(_inapplicable("c", "f5 = 0", "=", f"minimum degree {delta} < 3"))
    add(AuditEntry("d", "e <= 12(n-2)/5", F(e), F(12 * (n - 2), 5), "<="))

    prime_rows = [
        ("e1", "e(G') <= 2|G'| - 4", "<="),
        ("e2", "f3' = e3'/3", "="),
        ("e3", "edges of G' on two triangular faces = 0", "="),
        ("e4", "edges of G' between a C4 face and a C3 face = 0", "="),
        ("f", "2 d2' + d3' >= 4|G'| - 2 e(G')", ">="),
    ]
    why = None
    if delta < 3:
        why = f"minimum degree {delta} < 3"
    elif not two_connected:
        why = "graph is not 2-connected"
    gp = None
    if why is None:
        gp = reduce_prime(pg)
        if gp.n < 3:
            why = f"G' has only {gp.n} vertices"
    if why is not None:
        for id_, desc, rel in prime_rows:
            add(_inapplicable(id_, desc, rel, why))
    else:
        np_, ep = gp.n, gp.edge_count
        fpp = face_profile(gp)
        ecp = classify_edges(gp)
        dp = degree_profile(gp.underlying).counts
        values = {
            "e1": (F(ep), F(2 * np_ - 4)),
            "e2": (F(fpp.count(3)), F(ecp.e(3), 3)),
            "e3": (F(ecp.pair(3, 3)), F(0)),
            "e4": (F(ecp.pair(3, 4)), F(0)),
            "f": (F(2 * dp.get(2, 0) + dp.get(3, 0)), F(4 * np_ - 2 * ep)),
        }
        for id_, desc, rel in prime_rows:
            add(AuditEntry(id_, desc, *values[id_], rel))

    add(AuditEntry("g", "f31 <= 2 e3 - 4 f3", F(fp.f31), F(2 * e3 - 4 * f3), "<="))
    if why is None:
        big = sum((i - 6) * c for i, c in fp.f_i.items() if i >= 7)
        d2p = degree_profile(gp.underlying).counts.get(2, 0)
        add(AuditEntry("h", "f31 + sum_{i>=7} (i-6) f_i >= d2'", F(fp.f31 + big), F(d2p), ">="))
    else:
        add(_inapplicable("h", "f31 + sum_{i>=7} (i-6) f_i >= d2'", ">=", why))
    return report
