"""Exact isomorphism testing for small graphs.

The matcher colors each graph's vertices by iterated refinement (start from
the vertex's distance histogram, then fold in neighbor-color multisets) and
backtracks over same-colored candidates. Disconnected graphs are matched
component by component.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Sequence
from typing import Optional

from .errors import OrderTooLarge
from .graph import (
    UNREACHABLE,
    Graph,
    _bfs_row,
    connected_components,
    induced_subgraph,
    metric_profile,
)

VertexMap = dict[int, int]

DEFAULT_MAX_ORDER = 64
BRUTE_FORCE_MAX_ORDER = 8


def distance_histograms(g: Graph) -> list[tuple[int, ...]]:
    """Per vertex: counts of vertices at distance 0, 1, 2, ... then unreachable."""
    n = g.order
    out = []
    for v in range(n):
        row = _bfs_row(g.rows, v)
        reach = [d for d in row if d is not UNREACHABLE]
        hist = [0] * (max(reach) + 1)
        for d in reach:
            hist[d] += 1
        hist.append(n - len(reach))
        out.append(tuple(hist))
    return out


def invariant_key(g: Graph) -> tuple:
    """Isomorphism-invariant bucket key.

    Carries the order, edge count and the sorted multiset of per-vertex
    distance histograms; the degree sequence, eccentricity multiset and
    global distance distribution are all recoverable from it.
    """
    return (g.order, g.edge_count, tuple(sorted(distance_histograms(g))))


def refined_colors(g: Graph) -> tuple[int, ...]:
    """Per-vertex colors from iterated neighborhood refinement.

    Starts from the distance histogram and repeatedly folds in the sorted
    colors of the neighbors until the partition stops splitting. The colors
    are an isomorphism invariant comparable across graphs.
    """
    colors = [hash(h) for h in distance_histograms(g)]
    classes = len(set(colors))
    nbrs = [g.neighbors(v) for v in g.vertices()]
    while True:
        new = [hash((colors[v], tuple(sorted(colors[w] for w in nbrs[v])))) for v in g.vertices()]
        new_classes = len(set(new))
        colors = new
        if new_classes == classes:
            return tuple(colors)
        classes = new_classes


def color_key(g: Graph, colors: Sequence[int]) -> tuple:
    """Bucket key from precomputed :func:`refined_colors`."""
    return (g.order, g.edge_count, tuple(sorted(colors)))


def match_colored(
    a: Graph, b: Graph, ca: Sequence[int], cb: Sequence[int]
) -> Optional[VertexMap]:
    """Backtracking matcher over precomputed :func:`refined_colors`.

    Works on any pair of graphs; connectivity only helps the pruning.
    """
    n = a.order
    if n != b.order:
        return None
    if n == 0:
        return {}
    if Counter(ca) != Counter(cb):
        return None
    class_size = Counter(ca)

    # smallest color class first, then grow along edges so each new vertex
    # has mapped neighbors constraining it
    order: list[int] = []
    placed = 0
    while len(order) < n:
        frontier = [v for v in range(n) if not placed >> v & 1 and (a.rows[v] & placed or not order)]
        if not frontier:
            frontier = [v for v in range(n) if not placed >> v & 1]
        v = min(frontier, key=lambda x: (class_size[ca[x]], -len(a.neighbors(x)), x))
        order.append(v)
        placed |= 1 << v

    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(cb[w], []).append(w)

    mapping: VertexMap = {}
    used = 0
    arows, brows = a.rows, b.rows

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        u = order[i]
        for c in by_color[ca[u]]:
            if used >> c & 1:
                continue
            ok = True
            for w in order[:i]:
                if (arows[u] >> w & 1) != (brows[c] >> mapping[w] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = c
            used |= 1 << c
            if extend(i + 1):
                return True
            used &= ~(1 << c)
            del mapping[u]
        return False

    return dict(mapping) if extend(0) else None


def _match_connected(a: Graph, b: Graph) -> Optional[VertexMap]:
    return match_colored(a, b, refined_colors(a), refined_colors(b))


def are_isomorphic(a: Graph, b: Graph, max_order: int = DEFAULT_MAX_ORDER) -> Optional[VertexMap]:
    """Return an isomorphism ``a -> b`` as a vertex map, or ``None``.

    Raises :class:`OrderTooLarge` above ``max_order`` vertices; callers
    should fall back to :func:`invariant_key` screening there.
    """
    if max(a.order, b.order) > max_order:
        raise OrderTooLarge(f"isomorphism test limited to {max_order} vertices")
    if a.order != b.order or a.edge_count != b.edge_count:
        return None
    if sorted(a.degrees()) != sorted(b.degrees()):
        return None

    comps_a = connected_components(a)
    comps_b = connected_components(b)
    if len(comps_a) != len(comps_b):
        return None
    if len(comps_a) <= 1:
        return _match_connected(a, b)

    def keyed(g: Graph, comps: list[list[int]]):
        out = []
        for comp in comps:
            sub, ids = induced_subgraph(g, comp)
            back = {new: old for old, new in ids.items()}
            out.append((invariant_key(sub), comp[0], sub, back))
        out.sort(key=lambda item: (item[0], item[1]))
        return out

    parts_a = keyed(a, comps_a)
    parts_b = keyed(b, comps_b)
    if [p[0] for p in parts_a] != [p[0] for p in parts_b]:
        return None

    mapping: VertexMap = {}
    taken = [False] * len(parts_b)
    for key, _, sub_a, back_a in parts_a:
        for j, (key_b, _, sub_b, back_b) in enumerate(parts_b):
            if taken[j] or key_b != key:
                continue
            m = _match_connected(sub_a, sub_b)
            if m is not None:
                taken[j] = True
                for x, y in m.items():
                    mapping[back_a[x]] = back_b[y]
                break
        else:
            return None
    return mapping


def is_isomorphism(a: Graph, b: Graph, mapping: VertexMap) -> bool:
    """Check that ``mapping`` is a bijection carrying E(a) exactly onto E(b)."""
    if a.order != b.order or len(mapping) != a.order:
        return False
    if sorted(mapping) != list(range(a.order)) or sorted(mapping.values()) != list(range(b.order)):
        return False
    image = {frozenset((mapping[u], mapping[v])) for u, v in a.edges()}
    return image == {frozenset(e) for e in b.edges()}


def brute_force_isomorphic(a: Graph, b: Graph) -> bool:
    """Ground truth by trying every vertex bijection (order <= 8)."""
    n = a.order
    if max(n, b.order) > BRUTE_FORCE_MAX_ORDER:
        raise OrderTooLarge(f"brute force limited to {BRUTE_FORCE_MAX_ORDER} vertices")
    if n != b.order or a.edge_count != b.edge_count:
        return False
    a_edges = a.edges()
    brows = b.rows
    for perm in itertools.permutations(range(n)):
        if all(brows[perm[u]] >> perm[v] & 1 for u, v in a_edges):
            return True
    return False


def center_matches(g: Graph, h: Graph, max_order: int = DEFAULT_MAX_ORDER) -> Optional[VertexMap]:
    """Match C(g) against ``h``.

    The returned map sends central vertices of ``g`` (original ids) to
    vertices of ``h``.
    """
    prof = metric_profile(g)
    sub, ids = induced_subgraph(g, prof.center_vertices)
    m = are_isomorphic(sub, h, max_order=max_order)
    if m is None:
        return None
    back = {new: old for old, new in ids.items()}
    return {back[x]: y for x, y in m.items()}
