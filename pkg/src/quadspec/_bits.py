"""Word-level helpers for the bitset adjacency representation.

Adjacency rows are numpy uint64 arrays; bit v of row u (word v // 64,
bit v % 64) is 1 iff uv is an edge.
"""

import numpy as np

WORD = 64

if hasattr(np, "bitwise_count"):
    def popcount(arr):
        """Population count of each uint64 element."""
        return np.bitwise_count(arr)
else:  # numpy < 2.0
    _LUT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def popcount(arr):
        b = arr.view(np.uint8)
        return _LUT[b].reshape(arr.shape + (8,)).sum(axis=-1, dtype=np.uint64)


def words_needed(n):
    return max(1, (n + WORD - 1) // WORD)


def unpack_rows(words, n):
    """(n, w) uint64 rows -> (n, n) uint8 0/1 adjacency matrix."""
    if n == 0:
        return np.zeros((0, 0), dtype=np.uint8)
    as_bytes = words.view(np.uint8)
    bits = np.unpackbits(as_bytes, axis=1, bitorder="little")
    return bits[:, :n]


def pack_rows(dense):
    """(n, n) 0/1 matrix -> (n, w) uint64 rows."""
    n = dense.shape[0]
    w = words_needed(n)
    if n == 0:
        return np.zeros((0, w), dtype=np.uint64)
    padded = np.zeros((n, w * WORD), dtype=np.uint8)
    padded[:, :n] = dense != 0
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed.view(np.uint64))


def triangle_pairs(n):
    """Vertex pairs (u, v), u < v, in column-major upper-triangle order.

    Bit k of an edge mask corresponds to (u[k], v[k]); this is also the
    bit order of the graph6 encoding.
    """
    v = np.repeat(np.arange(n), np.arange(n))
    u = np.concatenate([np.arange(j) for j in range(n)]) if n > 1 else \
        np.zeros(0, dtype=np.int64)
    return u.astype(np.int64), v.astype(np.int64)
