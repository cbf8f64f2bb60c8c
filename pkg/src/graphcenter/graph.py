"""Immutable simple graphs and the exact distance/eccentricity engine.

Vertices are the dense integers ``0 .. order-1``. Each vertex keeps a sorted
neighbor tuple and a bitset row (a Python ``int``) so breadth-first search can
expand a whole frontier with a handful of ``|`` operations.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Union

from .errors import (
    DisconnectedGraph,
    EmptyGraph,
    OrderTooLarge,
    SelfLoop,
    VertexOutOfRange,
)

MAX_ORDER = 4096


class Unreachable(enum.Enum):
    """Marker for vertex pairs joined by no walk."""

    UNREACHABLE = "unreachable"

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = Unreachable.UNREACHABLE

Distance = Union[int, Unreachable]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A finite simple undirected graph on vertices ``0 .. order-1``.

    Instances are immutable and hashable; equality is labeled equality
    (same order, same edge set). Use :func:`graphcenter.are_isomorphic`
    for unlabeled comparison.
    """

    __slots__ = ("_order", "_rows", "_nbrs", "_hash")

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise VertexOutOfRange(f"order must be non-negative, got {order}")
        if order > MAX_ORDER:
            raise OrderTooLarge(f"order {order} exceeds the supported maximum {MAX_ORDER}")
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._set_rows(rows)

    def _set_rows(self, rows: Sequence[int]) -> None:
        if len(rows) > MAX_ORDER:
            raise OrderTooLarge(f"order {len(rows)} exceeds the supported maximum {MAX_ORDER}")
        self._order = len(rows)
        self._rows = tuple(rows)
        self._nbrs = tuple(tuple(_bits(r)) for r in self._rows)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from bitset rows without re-validating.

        The rows must already be symmetric with an empty diagonal.
        """
        g = cls.__new__(cls)
        g._set_rows(rows)
        return g

    @property
    def order(self) -> int:
        return self._order

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._nbrs]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._order) for v in self._nbrs[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._nbrs) // 2

    def vertices(self) -> range:
        return range(self._order)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._order:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self._order - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={self.edges()!r})"


def from_edge_list(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph with exactly the given edges; duplicates collapse to one edge."""
    return Graph(order, edges)


# -- named graphs ---------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    """The path P_n on ``n`` vertices (``n - 1`` edges)."""
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise VertexOutOfRange(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph.from_rows([(full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)])


# -- composition ------------------------------------------------------------


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """``a`` followed by ``b`` with b's ids shifted by ``a.order``."""
    shift = a.order
    return Graph.from_rows(list(a.rows) + [r << shift for r in b.rows])


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus every edge between a vertex of ``a`` and one of ``b``."""
    na, nb = a.order, b.order
    all_b = ((1 << nb) - 1) << na
    all_a = (1 << na) - 1
    rows = [r | all_b for r in a.rows] + [(r << na) | all_a for r in b.rows]
    return Graph.from_rows(rows)


def attach_path(g: Graph, at: int, length: int) -> Graph:
    """Hang a path with ``length`` new vertices off vertex ``at``.

    The new vertices get ids ``g.order .. g.order + length - 1`` in path order,
    the first one adjacent to ``at``.
    """
    if not 0 <= at < g.order:
        raise VertexOutOfRange(f"vertex {at} not in 0..{g.order - 1}")
    if length < 0:
        raise ValueError(f"path length must be non-negative, got {length}")
    if length == 0:
        return g
    n = g.order
    edges = g.edges()
    prev = at
    for k in range(length):
        edges.append((prev, n + k))
        prev = n + k
    return Graph(n + length, edges)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep``, relabeled in increasing old-id order.

    Returns the subgraph and the ``old id -> new id`` map.
    """
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.order:
            raise VertexOutOfRange(f"vertex {v} not in 0..{g.order - 1}")
    mapping = {old: new for new, old in enumerate(kept)}
    rows = []
    for old in kept:
        r = 0
        for w in g.neighbors(old):
            new = mapping.get(w)
            if new is not None:
                r |= 1 << new
        rows.append(r)
    return Graph.from_rows(rows), mapping


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose edge ``perm[u] perm[v]`` exists iff ``uv`` is an edge of ``g``."""
    return Graph(g.order, ((perm[u], perm[v]) for u, v in g.edges()))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, ordered by smallest vertex."""
    rows = g.rows
    unseen = (1 << g.order) - 1
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        seen = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(list(_bits(seen)))
        unseen &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return False
    return len(connected_components(g)) == 1


# -- distances ----------------------------------------------------------------


def _bfs_row(rows: Sequence[int], src: int) -> list[Distance]:
    dist: list[Distance] = [UNREACHABLE] * len(rows)
    seen = frontier = 1 << src
    level = 0
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            dist[v] = level
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        level += 1
    return dist


def _eccentricity(rows: Sequence[int], src: int, everyone: int) -> int:
    # last level reached by BFS from src; -1 if some vertex is never reached
    seen = frontier = 1 << src
    level = 0
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        if not frontier:
            return level if seen == everyone else -1
        seen |= frontier
        level += 1


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; unreachable pairs hold :data:`UNREACHABLE`."""

    order: int
    entries: tuple[tuple[Distance, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> Distance:
        u, v = pair
        return self.entries[u][v]

    def row(self, v: int) -> tuple[Distance, ...]:
        return self.entries[v]

    def is_connected(self) -> bool:
        return self.order > 0 and all(
            d is not UNREACHABLE for row in self.entries for d in row
        )


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact hop distances by a breadth-first search from every vertex."""
    rows = g.rows
    return DistanceMatrix(g.order, tuple(tuple(_bfs_row(rows, s)) for s in range(g.order)))


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    center_vertices: frozenset[int]

    @property
    def center_order(self) -> int:
        return len(self.center_vertices)

    @property
    def sorted_center(self) -> list[int]:
        return sorted(self.center_vertices)


def eccentricities(g: Graph) -> tuple[int, ...]:
    """Per-vertex eccentricity of a connected graph.

    Raises :class:`EmptyGraph` or :class:`DisconnectedGraph` when undefined.
    """
    n = g.order
    if n == 0:
        raise EmptyGraph("eccentricity is undefined on the graph with no vertices")
    everyone = (1 << n) - 1
    rows = g.rows
    ecc = []
    for v in range(n):
        e = _eccentricity(rows, v, everyone)
        if e < 0:
            raise DisconnectedGraph("graph is disconnected; eccentricities are undefined")
        ecc.append(e)
    return tuple(ecc)


def metric_profile(g: Graph) -> EccentricityProfile:
    """Eccentricities, radius, diameter and central vertex set of ``g``."""
    ecc = eccentricities(g)
    rad = min(ecc)
    return EccentricityProfile(
        ecc=ecc,
        radius=rad,
        diameter=max(ecc),
        center_vertices=frozenset(v for v, e in enumerate(ecc) if e == rad),
    )


def center(g: Graph) -> tuple[Graph, dict[int, int]]:
    """The center C(g) as an induced subgraph, with its id map."""
    return induced_subgraph(g, metric_profile(g).center_vertices)
