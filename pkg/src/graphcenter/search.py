"""Exhaustive search for small graphs with a single central vertex.

Graphs on ``n <= 8`` vertices are generated in process: every graph on ``n``
vertices is a graph on ``n - 1`` vertices plus one vertex joined to some
subset, so the classes at ``n`` come from extending each class at ``n - 1``
in all ``2**(n-1)`` ways and deduplicating by refined-color buckets followed
by exact isomorphism tests. Orders 9 and 10 stream from an external
graph6 corpus instead.
"""

from __future__ import annotations

import enum
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Optional, Union

from .errors import OrderTooLarge, PrescriptionOutOfRange
from .formats import iter_graph6_file, to_graph6
from .graph import Graph, is_connected, metric_profile
from .isomorphism import are_isomorphic, color_key, match_colored, refined_colors

MAX_SEARCH_ORDER = 10
MAX_GENERATED_ORDER = 8

PathLike = Union[str, Path]


class Mode(str, enum.Enum):
    FIRST_MINIMAL = "first_minimal"
    ALL_MINIMAL = "all_minimal"
    ALL_UP_TO_BOUND = "all_up_to_bound"


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Includes disconnected graphs. Ordered by edge count, then graph6 string.
    """
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if n > MAX_GENERATED_ORDER:
        raise OrderTooLarge(f"in-process generation stops at {MAX_GENERATED_ORDER} vertices")
    if n == 0:
        return (Graph(0),)
    buckets: dict[tuple, list[tuple[Graph, tuple[int, ...]]]] = {}
    new_bit = 1 << (n - 1)
    for base in all_graphs(n - 1):
        rows = base.rows
        for subset in range(1 << (n - 1)):
            ext = [r | new_bit if subset >> v & 1 else r for v, r in enumerate(rows)]
            ext.append(subset)
            g = Graph.from_rows(ext)
            colors = refined_colors(g)
            bucket = buckets.setdefault(color_key(g, colors), [])
            if not any(match_colored(g, rep, colors, rc) is not None for rep, rc in bucket):
                bucket.append((g, colors))
    reps = [g for bucket in buckets.values() for g, _ in bucket]
    reps.sort(key=lambda g: (g.edge_count, to_graph6(g)))
    return tuple(reps)


def enumerate_connected_graphs(n: int, corpus: Optional[PathLike] = None) -> Iterator[Graph]:
    """Yield one connected graph per isomorphism class on ``n`` vertices.

    ``n <= 8`` is generated in process. ``n`` of 9 or 10 needs ``corpus``, a
    graph6 file with one graph per line; graphs of other orders and
    disconnected graphs in it are skipped.
    """
    if n > MAX_SEARCH_ORDER:
        raise OrderTooLarge(f"enumeration is limited to {MAX_SEARCH_ORDER} vertices")
    if n < 1:
        return
    if n <= MAX_GENERATED_ORDER and corpus is None:
        yield from (g for g in all_graphs(n) if is_connected(g))
        return
    if corpus is None:
        raise OrderTooLarge(f"order {n} needs an external graph6 corpus")
    for g in iter_graph6_file(corpus):
        if g.order == n and is_connected(g):
            yield g


@dataclass(frozen=True)
class SearchQuery:
    r: int
    d: int
    max_order: int
    mode: Mode = Mode.FIRST_MINIMAL
    corpus: Optional[PathLike] = None

    def __post_init__(self):
        if not 1 <= self.r <= self.d <= 2 * self.r:
            raise PrescriptionOutOfRange(
                f"need 1 <= r <= d <= 2r, got r={self.r}, d={self.d}"
            )
        if self.max_order > MAX_SEARCH_ORDER:
            raise OrderTooLarge(f"max_order {self.max_order} exceeds {MAX_SEARCH_ORDER}")
        object.__setattr__(self, "mode", Mode(self.mode))


@dataclass
class SearchResult:
    minimal_order: Optional[int]
    witnesses: list[Graph] = field(default_factory=list)
    exhausted: bool = False

    @property
    def found(self) -> bool:
        return self.minimal_order is not None

    def to_text(self) -> str:
        head = "minimal_order=" + (str(self.minimal_order) if self.found else "NotFound")
        lines = [f"{head} exhausted={str(self.exhausted).lower()} witnesses={len(self.witnesses)}"]
        lines += [to_graph6(g) for g in self.witnesses]
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "minimal_order": self.minimal_order,
            "exhausted": self.exhausted,
            "witnesses": [to_graph6(g) for g in self.witnesses],
        }


def _single_center_profile(g: Graph) -> Optional[tuple[int, int]]:
    prof = metric_profile(g)
    if prof.center_order != 1:
        return None
    return prof.radius, prof.diameter


def _filter_chunk(args: tuple[list[str], int, int]) -> list[int]:
    from .formats import from_graph6

    codes, r, d = args
    hits = []
    for i, code in enumerate(codes):
        if _single_center_profile(from_graph6(code)) == (r, d):
            hits.append(i)
    return hits


def _matching(graphs: list[Graph], r: int, d: int, workers: int) -> list[Graph]:
    if workers <= 1 or len(graphs) < 2 * workers:
        return [g for g in graphs if _single_center_profile(g) == (r, d)]
    size = -(-len(graphs) // workers)
    chunks = [graphs[i:i + size] for i in range(0, len(graphs), size)]
    payload = [([to_graph6(g) for g in chunk], r, d) for chunk in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_filter_chunk, payload))
    return [chunk[i] for chunk, hits in zip(chunks, results) for i in hits]


def _dedup(graphs: list[Graph]) -> list[Graph]:
    kept: list[Graph] = []
    for g in graphs:
        if not any(are_isomorphic(g, k) is not None for k in kept):
            kept.append(g)
    return kept


def find_single_center_graphs(q: SearchQuery, workers: int = 1) -> SearchResult:
    """Search connected graphs of order up to ``q.max_order`` with C(X) = K_1,
    rad(X) = ``q.r`` and diam(X) = ``q.d``.

    Any vertex may be the hub. ``workers > 1`` shards each order across
    processes; the merged result is identical to the sequential one.
    """
    witnesses: list[Graph] = []
    minimal: Optional[int] = None
    # a diameter-d graph has at least d + 1 vertices
    for m in range(max(1, q.d + 1), q.max_order + 1):
        graphs = list(enumerate_connected_graphs(m, q.corpus if m > MAX_GENERATED_ORDER else None))
        hits = _matching(graphs, q.r, q.d, workers)
        if not hits:
            continue
        if minimal is None:
            minimal = m
        if q.mode is Mode.FIRST_MINIMAL:
            return SearchResult(m, [hits[0]], exhausted=True)
        witnesses.extend(hits)
        if q.mode is Mode.ALL_MINIMAL:
            return SearchResult(m, _dedup(witnesses), exhausted=True)
    return SearchResult(minimal, _dedup(witnesses), exhausted=True)


@dataclass
class ClassificationTable:
    """Single-center graphs tabulated by (radius, diameter)."""

    rows: list[tuple[int, int, int, bool, str]]
    counts: dict[tuple[int, int], int]
    max_order: int

    def to_text(self) -> str:
        lines = ["r d order d_eq_2r graph6"]
        lines += [f"{r} {d} {n} {'yes' if eq else 'no'} {code}" for r, d, n, eq, code in self.rows]
        lines.append("")
        lines.append("r d count")
        lines += [f"{r} {d} {c}" for (r, d), c in sorted(self.counts.items())]
        return "\n".join(lines)


def classify_row(g: Graph) -> Optional[tuple[int, int, int, bool, str]]:
    """``(r, d, order, d == 2r, graph6)`` for a single-center graph, else ``None``."""
    rd = _single_center_profile(g)
    if rd is None:
        return None
    r, d = rd
    return r, d, g.order, d == 2 * r, to_graph6(g)


def classify_d_equals_2r(max_order: int, corpus: Optional[PathLike] = None) -> ClassificationTable:
    """Tabulate every single-center connected graph with at most ``max_order`` vertices."""
    if max_order > 9:
        raise OrderTooLarge(f"classification is limited to 9 vertices, got {max_order}")
    rows = []
    for m in range(1, max_order + 1):
        for g in enumerate_connected_graphs(m, corpus if m > MAX_GENERATED_ORDER else None):
            row = classify_row(g)
            if row is not None:
                rows.append(row)
    counts = Counter((r, d) for r, d, *_ in rows)
    return ClassificationTable(rows, dict(counts), max_order)
