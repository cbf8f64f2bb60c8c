"""Independent reference computations used only by the tests.

Nothing here calls into the BFS engine, the isomorphism matcher or the
enumerator it is meant to check.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction


def floyd_warshall(n, edges):
    """Distances as a list of lists with ``None`` for unreachable pairs."""
    inf = math.inf
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return [[None if x == inf else int(x) for x in row] for row in d]


def metrics(n, edges):
    """(eccentricities, radius, diameter, center set) from Floyd-Warshall."""
    d = floyd_warshall(n, edges)
    ecc = [max(row) for row in d]
    rad = min(ecc)
    return ecc, rad, max(ecc), {v for v in range(n) if ecc[v] == rad}


def _pairs(n):
    return [(i, j) for j in range(n) for i in range(j)]


def canonical_mask(n, edges):
    """Smallest edge bitmask over all relabelings; equal iff isomorphic."""
    pairs = _pairs(n)
    index = {p: k for k, p in enumerate(pairs)}
    es = [(min(u, v), max(u, v)) for u, v in edges]
    best = None
    for perm in itertools.permutations(range(n)):
        m = 0
        for u, v in es:
            a, b = perm[u], perm[v]
            m |= 1 << index[(min(a, b), max(a, b))]
        if best is None or m < best:
            best = m
    return best


def _connected(n, edges):
    if n == 0:
        return False
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def brute_force_class_count(n, connected_only=True):
    """Isomorphism classes on n vertices by canonicalizing every edge subset."""
    pairs = _pairs(n)
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
        if connected_only and not _connected(n, edges):
            continue
        seen.add(canonical_mask(n, edges))
    return len(seen)


def burnside_graph_count(n):
    """All graphs on n vertices up to isomorphism, by orbit counting.

    Averages 2**(cycles of the induced action on vertex pairs) over S_n.
    """
    if n <= 1:
        return 1
    pairs = _pairs(n)
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = set()
        cycles = 0
        for p in pairs:
            if p in seen:
                continue
            cycles += 1
            q = p
            while q not in seen:
                seen.add(q)
                a, b = perm[q[0]], perm[q[1]]
                q = (min(a, b), max(a, b))
        total += 2 ** cycles
    return total // math.factorial(n)


def connected_counts_from_totals(totals):
    """Invert the Euler transform: totals[k] graphs on k vertices -> connected counts.

    ``totals[0]`` must be 1. Returns a list aligned with ``totals``.
    """
    n_max = len(totals) - 1
    conn = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        # n * a_n = sum_{k=1..n} b_k a_{n-k}, b_k = sum_{d | k} d c_d
        partial = Fraction(0)
        for k in range(1, n):
            b_k = sum(d * conn[d] for d in range(1, k + 1) if k % d == 0)
            partial += b_k * totals[n - k]
        b_n_known = sum(d * conn[d] for d in range(1, n) if n % d == 0)
        # n a_n = partial + (b_n_known + n c_n) a_0
        c_n = (n * totals[n] - partial - b_n_known) / n
        assert c_n.denominator == 1
        conn[n] = int(c_n)
    return conn


def random_edges(n, p, rng):
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def random_connected_edges(n, p, rng):
    """Random spanning tree plus independent extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return sorted(edges)


def seeded_rng(seed):
    return random.Random(seed)
