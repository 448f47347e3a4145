"""Shared test helpers: independent oracles and seeded graph corpora.

The 4-cycle oracle here is deliberately primitive (sets of frozensets,
itertools) so it shares no code path with the library kernels.
"""

import itertools
import math

import numpy as np

from quadspec import Graph


def c4_oracle(graph: Graph) -> int:
    """Independent brute-force 4-cycle count."""
    edges = {frozenset(e) for e in graph.edges()}

    def adj(a, b):
        return frozenset((a, b)) in edges

    count = 0
    for a, b, c, d in itertools.combinations(range(graph.n), 4):
        if adj(a, c) and adj(c, b) and adj(b, d) and adj(d, a):
            count += 1
        if adj(a, b) and adj(b, c) and adj(c, d) and adj(d, a):
            count += 1
        if adj(a, b) and adj(b, d) and adj(d, c) and adj(c, a):
            count += 1
    return count


def random_gnp(rng, n, p) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def random_gnm(rng, n, m) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    idx = rng.choice(len(pairs), size=m, replace=False)
    return Graph(n, [pairs[i] for i in idx])


def random_tree(rng, n) -> Graph:
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    return Graph(n, edges)


def planted_clique_graph(rng, m, n_cap=60) -> Graph:
    """m-edge graph containing K_s with s = ceil(sqrt(m) + 1), so the
    spectral radius is at least sqrt(m)."""
    s = math.ceil(math.sqrt(m)) + 1
    clique_edges = s * (s - 1) // 2
    assert clique_edges <= m, f"m={m} too small to plant K_{s}"
    n_lo = max(s, math.ceil((1 + math.sqrt(1 + 8 * m)) / 2))
    n = int(rng.integers(n_lo, n_cap + 1))
    edges = {(u, v) for u in range(s) for v in range(u + 1, s)}
    while len(edges) < m:
        x, y = int(rng.integers(n)), int(rng.integers(n))
        if x == y:
            continue
        e = (min(x, y), max(x, y))
        edges.add(e)
    return Graph(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def path(n) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])
