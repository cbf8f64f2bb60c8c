"""Certify that a graph meets a prescription, plus the boundary-case checks.

Reports carry the values found next to the values expected, so a failing
gadget says what went wrong rather than only that something did.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .constructions import Prescription
from .errors import OrderTooLarge
from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    induced_subgraph,
    metric_profile,
)
from .isomorphism import are_isomorphic

ORACLE_MAX_ORDER = 12


@dataclass
class VerificationReport:
    radius_found: int
    diameter_found: int
    center_order: int
    center_vertices: list[int]
    center_iso_ok: Optional[bool] = None
    unique_center: Optional[bool] = None
    expected: dict = field(default_factory=dict)
    failure_reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failure_reason is None

    def _fail(self, reason: str) -> None:
        # keep the first failure; later checks still fill in their fields
        if self.failure_reason is None:
            self.failure_reason = reason

    def to_dict(self) -> dict:
        return {
            "radius": self.radius_found,
            "diameter": self.diameter_found,
            "center_vertices": self.center_vertices,
            "center_order": self.center_order,
            "center_iso_ok": self.center_iso_ok,
            "unique_center": self.unique_center,
            "expected": self.expected,
            "pass": self.passed,
            "failure_reason": self.failure_reason,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        def fmt(v):
            if v is None:
                return "-"
            if isinstance(v, bool):
                return str(v).lower()
            if isinstance(v, list):
                return "[" + ",".join(map(str, v)) + "]"
            return str(v)

        parts = [
            f"pass={fmt(self.passed)}",
            f"radius={self.radius_found}",
            f"diameter={self.diameter_found}",
            f"center_order={self.center_order}",
            f"center={fmt(self.center_vertices)}",
            f"center_iso_ok={fmt(self.center_iso_ok)}",
            f"unique_center={fmt(self.unique_center)}",
        ]
        parts += [f"expected_{k}={fmt(v)}" for k, v in sorted(self.expected.items())]
        if self.failure_reason is not None:
            parts.append(f"failure_reason={self.failure_reason}")
        return "\n".join(parts)


def verify_prescription(
    g: Graph,
    p: Prescription,
    expected_center_image: Optional[Iterable[int]] = None,
) -> VerificationReport:
    """Check rad(g) = p.r, diam(g) = p.d and C(g) isomorphic to p.h.

    With ``expected_center_image`` the central vertex set must also equal
    that set exactly.
    """
    prof = metric_profile(g)
    rep = VerificationReport(
        radius_found=prof.radius,
        diameter_found=prof.diameter,
        center_order=prof.center_order,
        center_vertices=prof.sorted_center,
        expected={"radius": p.r, "diameter": p.d, "center_order": p.h.order},
    )
    if prof.radius != p.r:
        rep._fail(f"radius {prof.radius} != {p.r}")
    if prof.diameter != p.d:
        rep._fail(f"diameter {prof.diameter} != {p.d}")
    sub, _ = induced_subgraph(g, prof.center_vertices)
    if sub.order != p.h.order:
        rep.center_iso_ok = False
    else:
        try:
            rep.center_iso_ok = are_isomorphic(sub, p.h) is not None
        except OrderTooLarge:
            rep.center_iso_ok = None
            rep._fail("center too large for the exact isomorphism test")
    if rep.center_iso_ok is False:
        rep._fail(f"center (order {sub.order}) is not isomorphic to H (order {p.h.order})")
    if expected_center_image is not None:
        image = sorted(set(expected_center_image))
        rep.expected["center_vertices"] = image
        if image != prof.sorted_center:
            rep._fail("central vertex set differs from the installed image")
    return rep


def verify_single_center(g: Graph, r: int, d: int, h: int) -> VerificationReport:
    """Check that ``h`` alone is central, with eccentricity ``r``, and diam(g) = ``d``."""
    prof = metric_profile(g)
    rep = VerificationReport(
        radius_found=prof.radius,
        diameter_found=prof.diameter,
        center_order=prof.center_order,
        center_vertices=prof.sorted_center,
        expected={"radius": r, "diameter": d, "hub": h},
    )
    if not 0 <= h < g.order:
        rep._fail(f"hub {h} is not a vertex")
        rep.unique_center = False
        return rep
    if prof.ecc[h] != r:
        rep._fail(f"eccentricity of hub {h} is {prof.ecc[h]}, expected {r}")
    others = [v for v in g.vertices() if v != h and prof.ecc[v] <= r]
    rep.unique_center = not others and prof.ecc[h] == r
    if others:
        rep._fail(f"vertices {others} have eccentricity <= {r}")
    if prof.diameter != d:
        rep._fail(f"diameter {prof.diameter} != {d}")
    return rep


@dataclass(frozen=True)
class JoinDecomposition:
    """``g`` written as K_t joined to Y."""

    t: int
    clique: tuple[int, ...]
    y: Graph
    y_vertices: tuple[int, ...]


def check_join_characterization(g: Graph) -> Optional[JoinDecomposition]:
    """Split a radius-1, diameter-2 graph into its universal clique and the rest.

    Returns ``None`` unless rad(g) = 1 and diam(g) = 2, or if the split fails
    (center not a clique, or a remaining vertex adjacent to everything).
    """
    prof = metric_profile(g)
    if prof.radius != 1 or prof.diameter != 2:
        return None
    n = g.order
    universal = tuple(v for v in g.vertices() if g.degree(v) == n - 1)
    rest = tuple(v for v in g.vertices() if g.degree(v) != n - 1)
    if set(universal) != prof.center_vertices:
        return None
    k, _ = induced_subgraph(g, universal)
    if k.edge_count != len(universal) * (len(universal) - 1) // 2:
        return None
    y, _ = induced_subgraph(g, rest)
    if y.order < 2 or any(y.degree(v) == y.order - 1 for v in y.vertices()):
        return None
    for a in universal:
        for b in rest:
            if not g.has_edge(a, b):
                return None
    return JoinDecomposition(len(universal), universal, y, rest)


def is_self_centered(g: Graph) -> bool:
    """True iff rad(g) = diam(g), i.e. g is its own center."""
    prof = metric_profile(g)
    return prof.radius == prof.diameter


def relaxation_distances(g: Graph) -> DistanceMatrix:
    """All-pairs distances by repeated min-plus relaxation of the adjacency matrix.

    Shares no code with the breadth-first engine; used as its oracle.
    """
    n = g.order
    inf = float("inf")
    dist = [[0 if u == v else (1 if g.has_edge(u, v) else inf) for v in range(n)] for u in range(n)]
    changed = True
    while changed:
        changed = False
        for u in range(n):
            du = dist[u]
            for v in range(n):
                best = du[v]
                for w in range(n):
                    cand = du[w] + dist[w][v]
                    if cand < best:
                        best = cand
                if best < du[v]:
                    du[v] = best
                    changed = True
    entries = tuple(
        tuple(UNREACHABLE if d == inf else int(d) for d in row) for row in dist
    )
    return DistanceMatrix(n, entries)


def oracle_crosscheck(g: Graph) -> bool:
    """Compare BFS distances with :func:`relaxation_distances` entry by entry."""
    if g.order > ORACLE_MAX_ORDER:
        raise OrderTooLarge(f"oracle cross-check limited to {ORACLE_MAX_ORDER} vertices")
    return all_pairs_distances(g) == relaxation_distances(g)
