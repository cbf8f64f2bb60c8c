"""Builders for graphs with a prescribed radius, diameter and center.

Every builder returns a :class:`LabeledGraph`: the graph, the vertex set
where the desired center was installed, and a :class:`ConstructionRecipe`
naming the builder and its parameters.

Vertex layout is deterministic. Gadget vertices come first; when a graph
``H`` is installed as the center its vertices occupy the last ``H.order`` ids
in H's own order. Single-center gadgets put their central vertex at id 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Optional, Union

from .errors import (
    DisconnectedGraph,
    EmptyH,
    NotSelfCentered,
    NotSingleCenter,
    PrescriptionOutOfRange,
    RadiusTooSmall,
    UniversalVertexInY,
)
from .graph import Graph, complete_graph, is_connected, join, metric_profile


class Kind(str, enum.Enum):
    HEDETNIEMI = "hedetniemi"
    FIG2 = "fig2"
    FIG3 = "fig3"
    SUBSTITUTE_CENTER = "substitute_center"
    ATTACH_PATHS = "attach_paths"
    SINGLE_CENTER_TEMPLATE = "single_center_template"
    THEOREM4 = "theorem4"
    JOIN_SOLUTION = "join_solution"


@dataclass(frozen=True)
class Prescription:
    """Target radius ``r``, diameter ``d`` and center graph ``h``."""

    r: int
    d: int
    h: Graph

    def __post_init__(self):
        if self.r < 1:
            raise PrescriptionOutOfRange(f"radius must be at least 1, got r={self.r}")
        if self.d < self.r:
            raise PrescriptionOutOfRange(f"d is below r (d={self.d}, r={self.r})")
        if self.d > 2 * self.r:
            raise PrescriptionOutOfRange(f"d exceeds 2r (d={self.d}, r={self.r})")
        if self.h.order < 1:
            raise EmptyH("the center graph H needs at least one vertex")


@dataclass(frozen=True)
class ConstructionRecipe:
    """Which builder produced a graph and with which parameters.

    ``t`` is an arm length or path order, ``z`` the common radius/diameter
    of a self-centered H, ``n`` the diameter offset ``d - r - 1``, ``u`` and
    ``v`` the hub ids of the Hedetniemi graph, ``hub`` the designated center
    of a single-center graph, ``clique`` and ``y_order`` the part sizes of a
    join. ``base`` names the gadget a substitution was applied to.
    """

    kind: Kind
    r: Optional[int] = None
    d: Optional[int] = None
    t: Optional[int] = None
    z: Optional[int] = None
    n: Optional[int] = None
    u: Optional[int] = None
    v: Optional[int] = None
    hub: Optional[int] = None
    clique: Optional[int] = None
    y_order: Optional[int] = None
    base: Optional[Kind] = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind.value}
        for name in ("r", "d", "t", "z", "n", "u", "v", "hub", "clique", "y_order"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.base is not None:
            out["base"] = self.base.value
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ConstructionRecipe":
        kwargs = dict(data)
        kwargs["kind"] = Kind(kwargs["kind"])
        if "base" in kwargs:
            kwargs["base"] = Kind(kwargs["base"])
        return cls(**kwargs)


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    center_image: frozenset[int]
    recipe: ConstructionRecipe = field(compare=False)

    @property
    def order(self) -> int:
        return self.graph.order


def _check_h(h: Graph) -> None:
    if h.order < 1:
        raise EmptyH("the center graph H needs at least one vertex")


def _check_radius(r: int, name: str) -> None:
    if r < 2:
        raise PrescriptionOutOfRange(f"{name} needs r >= 2, got r={r}")


def _h_image(h: Graph, offset: int) -> frozenset[int]:
    return frozenset(range(offset, offset + h.order))


def hedetniemi(h: Graph, r: int) -> LabeledGraph:
    """Hubs ``u``, ``v`` adjacent to all of ``h``, each with an arm of length ``r - 1``.

    Radius ``r``, diameter ``2r``, center ``h``. Ids: ``u = 0``, ``v = 1``,
    u's arm, v's arm, then ``h``.
    """
    _check_h(h)
    _check_radius(r, "hedetniemi")
    t = r - 1
    u, v = 0, 1
    offset = 2 + 2 * t
    edges = []
    for hub, start in ((u, 2), (v, 2 + t)):
        prev = hub
        for k in range(t):
            edges.append((prev, start + k))
            prev = start + k
    for x in range(h.order):
        edges.append((u, offset + x))
        edges.append((v, offset + x))
    edges.extend((offset + a, offset + b) for a, b in h.edges())
    g = Graph(offset + h.order, edges)
    recipe = ConstructionRecipe(Kind.HEDETNIEMI, r=r, d=2 * r, t=t, u=u, v=v)
    return LabeledGraph(g, _h_image(h, offset), recipe)


def _c6_gadget(r: int, arm_at: tuple[int, ...], arm_len: int, kind: Kind, d: int) -> LabeledGraph:
    # hub 0; cycle c_1..c_6 on ids 1..6; hub adjacent to c_1, c_3, c_5
    edges = [(i, i % 6 + 1) for i in range(1, 7)]
    edges += [(0, 1), (0, 3), (0, 5)]
    nxt = 7
    for c in arm_at:
        prev = c
        for _ in range(arm_len):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    g = Graph(nxt, edges)
    return LabeledGraph(g, frozenset({0}), ConstructionRecipe(kind, r=r, d=d, t=arm_len, hub=0))


def fig2_gadget(r: int) -> LabeledGraph:
    """Single-center graph with radius ``r`` and diameter ``2r - 1``.

    A 6-cycle whose alternate vertices are joined to the hub, with a path of
    ``r - 2`` new vertices hanging off every cycle vertex.
    """
    _check_radius(r, "fig2_gadget")
    return _c6_gadget(r, (1, 2, 3, 4, 5, 6), r - 2, Kind.FIG2, 2 * r - 1)


def fig3_gadget(r: int) -> LabeledGraph:
    """Single-center graph with radius ``r`` and diameter ``2r``.

    Same 6-cycle and hub as :func:`fig2_gadget`, but paths of ``r - 1`` new
    vertices hang only off the three hub neighbors.
    """
    _check_radius(r, "fig3_gadget")
    return _c6_gadget(r, (1, 3, 5), r - 1, Kind.FIG3, 2 * r)


def substitute_center(x: Union[LabeledGraph, Graph], h: Graph) -> LabeledGraph:
    """Replace the unique central vertex of ``x`` by a copy of ``h``.

    Every vertex of the copy is joined to every former neighbor of the
    central vertex; the copy keeps exactly the edges of ``h``. The remaining
    vertices of ``x`` keep their relative order and come first.
    """
    base = x.recipe if isinstance(x, LabeledGraph) else None
    xg = x.graph if isinstance(x, LabeledGraph) else x
    _check_h(h)
    prof = metric_profile(xg)
    if prof.center_order != 1:
        raise NotSingleCenter(f"expected one central vertex, found {prof.center_order}")
    if prof.radius < 2:
        raise RadiusTooSmall(f"substitution needs radius >= 2, got {prof.radius}")
    (hub,) = prof.center_vertices

    def new_id(v: int) -> int:
        return v if v < hub else v - 1

    offset = xg.order - 1
    edges = [(new_id(a), new_id(b)) for a, b in xg.edges() if hub not in (a, b)]
    nbrs = [new_id(w) for w in xg.neighbors(hub)]
    for k in range(h.order):
        edges.extend((offset + k, w) for w in nbrs)
    edges.extend((offset + a, offset + b) for a, b in h.edges())
    g = Graph(offset + h.order, edges)
    recipe = ConstructionRecipe(
        Kind.SUBSTITUTE_CENTER,
        r=prof.radius,
        d=prof.diameter,
        hub=hub,
        base=base.kind if base is not None else None,
    )
    return LabeledGraph(g, _h_image(h, offset), recipe)


def attach_paths_uniform(h: Graph, t: int) -> LabeledGraph:
    """Make every vertex of a self-centered ``h`` the end of its own path P_t.

    With ``z = rad(h) = diam(h)`` the result has radius ``z + t - 1``,
    diameter ``2(t - 1) + z`` and center ``h``. Path vertices come first
    (``t - 1`` per vertex of ``h``, in h's vertex order), then ``h``.
    """
    _check_h(h)
    if t < 1:
        raise PrescriptionOutOfRange(f"path order t must be at least 1, got {t}")
    if not is_connected(h):
        raise DisconnectedGraph("attach_paths_uniform needs a connected H")
    prof = metric_profile(h)
    if prof.radius != prof.diameter:
        raise NotSelfCentered(
            f"H must be self-centered (rad={prof.radius}, diam={prof.diameter})"
        )
    z = prof.radius
    arm = t - 1
    offset = arm * h.order
    edges = [(offset + a, offset + b) for a, b in h.edges()]
    for x in range(h.order):
        prev = offset + x
        for k in range(arm):
            cur = x * arm + k
            edges.append((prev, cur))
            prev = cur
    g = Graph(offset + h.order, edges)
    recipe = ConstructionRecipe(Kind.ATTACH_PATHS, r=z + t - 1, d=2 * (t - 1) + z, t=t, z=z)
    return LabeledGraph(g, _h_image(h, offset), recipe)


def _check_template_range(r: int, d: int) -> None:
    if r < 2:
        raise PrescriptionOutOfRange(f"needs r >= 2, got r={r}")
    if d <= r:
        raise PrescriptionOutOfRange(f"needs d > r (d={d}, r={r})")
    if d > 2 * r:
        raise PrescriptionOutOfRange(f"d exceeds 2r (d={d}, r={r})")


def single_center_template(r: int, d: int) -> LabeledGraph:
    """Graph whose vertex 0 is the unique center, with radius ``r`` and diameter ``d``.

    Valid for ``r >= 2`` and ``r < d <= 2r``; write ``n = d - r - 1``.

    * ``n >= 1``: cycle c_0..c_{2r-1} with hub c_0, a leaf on every cycle
      vertex other than c_0 and its antipode c_r, and a path of ``n + 1``
      new vertices hanging off c_0.
    * ``n == 0``: cycle c_0..c_{2r} with hub c_0 and, for k = 1..2r, a vertex
      x_k adjacent to both antipodes c_{k+r} and c_{k+r+1} of c_k.
    """
    _check_template_range(r, d)
    n = d - r - 1
    if n >= 1:
        m = 2 * r
        edges = [(i, (i + 1) % m) for i in range(m)]
        nxt = m
        for i in range(1, m):
            if i != r:
                edges.append((i, nxt))
                nxt += 1
        prev = 0
        for _ in range(n + 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        g = Graph(nxt, edges)
    else:
        m = 2 * r + 1
        edges = [(i, (i + 1) % m) for i in range(m)]
        for k in range(1, m):
            x = m + k - 1
            edges.append(((k + r) % m, x))
            edges.append(((k + r + 1) % m, x))
        g = Graph(2 * m - 1, edges)
    recipe = ConstructionRecipe(Kind.SINGLE_CENTER_TEMPLATE, r=r, d=d, n=n, hub=0)
    return LabeledGraph(g, frozenset({0}), recipe)


def theorem4_build(p: Prescription) -> LabeledGraph:
    """Graph with radius ``p.r``, diameter ``p.d`` and center ``p.h``.

    Installs ``p.h`` in place of the hub of :func:`single_center_template`.
    Needs ``r >= 2`` and ``r < d <= 2r``; ``p.h`` may be disconnected.
    """
    _check_template_range(p.r, p.d)
    x = single_center_template(p.r, p.d)
    sub = substitute_center(x, p.h)
    recipe = ConstructionRecipe(
        Kind.THEOREM4, r=p.r, d=p.d, n=p.d - p.r - 1, hub=x.recipe.hub,
        base=Kind.SINGLE_CENTER_TEMPLATE,
    )
    return LabeledGraph(sub.graph, sub.center_image, recipe)


def join_solution(t: int, y: Graph) -> LabeledGraph:
    """K_t joined to ``y``: radius 1, diameter 2, center K_t.

    ``y`` needs at least two vertices and no vertex adjacent to all the
    others. Ids: ``y`` first, then the clique.
    """
    if t < 1:
        raise EmptyH(f"clique size must be at least 1, got {t}")
    if y.order < 2:
        raise PrescriptionOutOfRange(f"Y needs at least 2 vertices, got {y.order}")
    for v in y.vertices():
        if y.degree(v) == y.order - 1:
            raise UniversalVertexInY(
                f"vertex {v} of Y is adjacent to every other vertex of Y and would join the center"
            )
    g = join(y, complete_graph(t))
    recipe = ConstructionRecipe(Kind.JOIN_SOLUTION, r=1, d=2, clique=t, y_order=y.order)
    return LabeledGraph(g, frozenset(range(y.order, y.order + t)), recipe)
