"""Exhaustive enumeration of isomorphism-class representatives on n vertices.

Strategy: walk all 2^C(n,2) edge-subset masks in increasing order.  A mask
that has not been visited yet is the minimum of its isomorphism orbit (any
smaller orbit member would already have marked it), so it is emitted as the
canonical representative and its whole orbit -- the mask image under all n!
vertex permutations -- is marked visited.  Total work is one linear scan
plus n! permutation applications per class, which is cheap for n <= 7.

The canonical form is therefore the minimum adjacency bit-string over all
permutations, with bit k of a mask tied to the k-th upper-triangle pair in
column-major order (the graph6 bit order).
"""

import itertools

import numpy as np

from ._bits import triangle_pairs
from .config import SMALL_GRAPH_MAX_N
from .errors import SizeError
from .graphs import Graph

# number of isomorphism classes on exactly n vertices, n = 0..7
KNOWN_CLASS_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044)

_mask_cache = {}


def _perm_bit_powers(n):
    """(n!, C(n,2)) table: row p holds 2^(destination bit) for each source
    bit under permutation p."""
    u_idx, v_idx = triangle_pairs(n)
    rows = []
    for perm in itertools.permutations(range(n)):
        p = np.array(perm, dtype=np.int64)
        pu, pv = p[u_idx], p[v_idx]
        lo = np.minimum(pu, pv)
        hi = np.maximum(pu, pv)
        rows.append(hi * (hi - 1) // 2 + lo)
    dest = np.array(rows, dtype=np.int64)
    return np.left_shift(np.int64(1), dest)


def canonical_masks(n):
    """Sorted canonical edge masks, one per isomorphism class on n vertices."""
    if n < 0 or n > SMALL_GRAPH_MAX_N:
        raise SizeError(
            f"built-in enumerator handles n <= {SMALL_GRAPH_MAX_N}; "
            f"supply a graph6 stream for n={n}")
    if n in _mask_cache:
        return _mask_cache[n]
    nbits = n * (n - 1) // 2
    if n < 2:
        masks = np.zeros(1, dtype=np.int64)
    else:
        pow_table = _perm_bit_powers(n)
        size = 1 << nbits
        visited = np.zeros(size, dtype=bool)
        reps = []
        bit_positions = np.arange(nbits, dtype=np.int64)
        for mask in range(size):
            if visited[mask]:
                continue
            reps.append(mask)
            edge_bits = bit_positions[(mask >> bit_positions) & 1 == 1]
            orbit = pow_table[:, edge_bits].sum(axis=1) if len(edge_bits) else \
                np.zeros(len(pow_table), dtype=np.int64)
            visited[orbit] = True
        masks = np.array(reps, dtype=np.int64)
    _mask_cache[n] = masks
    return masks


def mask_to_graph(n, mask):
    u_idx, v_idx = triangle_pairs(n)
    bits = np.arange(len(u_idx), dtype=np.int64)
    sel = (int(mask) >> bits) & 1 == 1
    return Graph(n, zip(u_idx[sel].tolist(), v_idx[sel].tolist()))


def graph_to_mask(graph):
    u_idx, v_idx = triangle_pairs(graph.n)
    mask = 0
    for k in range(len(u_idx)):
        if graph.has_edge(int(u_idx[k]), int(v_idx[k])):
            mask |= 1 << k
    return mask


def canonical_mask(graph):
    """Minimum edge mask of the graph's isomorphism orbit (n <= 7)."""
    if graph.n > SMALL_GRAPH_MAX_N:
        raise SizeError(f"canonical form is brute force; needs n <= {SMALL_GRAPH_MAX_N}")
    if graph.n < 2:
        return 0
    pow_table = _perm_bit_powers(graph.n)
    mask = graph_to_mask(graph)
    if mask == 0:
        return 0
    nbits = graph.n * (graph.n - 1) // 2
    bit_positions = np.arange(nbits, dtype=np.int64)
    edge_bits = bit_positions[(mask >> bit_positions) & 1 == 1]
    return int(pow_table[:, edge_bits].sum(axis=1).min())


def enumerate_graphs(n, m=None):
    """Yield one representative Graph per isomorphism class on n vertices.

    Classes with fewer non-isolated vertices appear padded with isolated
    vertices, so "on n vertices" covers every graph with at most n of them.
    With m given, only classes with exactly m edges are yielded.
    """
    masks = canonical_masks(n)
    if m is not None:
        counts = np.array([bin(int(x)).count("1") for x in masks])
        masks = masks[counts == m]
    for mask in masks:
        yield mask_to_graph(n, mask)


def class_count(n):
    return len(canonical_masks(n))
