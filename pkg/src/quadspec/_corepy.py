"""Pure-python (numpy) kernels; fallback when the compiled core is absent.

Same contracts as quadspec._core.  All counting kernels work in exact
integer arithmetic; with the n <= 4096 vertex cap every intermediate fits
comfortably in int64 (tr A^4 < n^4 ~ 2.8e14).
"""

import itertools

import numpy as np

from ._bits import popcount, unpack_rows

LANE = "pure"


def c4_codegree_count(words, n):
    """Number of 4-cycle subgraphs via pairwise codegrees."""
    total = 0
    for u in range(n - 1):
        codeg = popcount(words[u + 1:] & words[u]).sum(axis=1).astype(np.int64)
        total += int((codeg * (codeg - 1) // 2).sum())
    # every 4-cycle is seen once from each of its two diagonals
    if total % 2:
        raise AssertionError("codegree pair sum must be even")
    return total // 2


def closed_walk4_total(words, degrees, n):
    """tr A^4 as the sum of squared codegrees over ordered vertex pairs."""
    degrees = np.asarray(degrees, dtype=np.int64)
    total = int((degrees * degrees).sum())
    for u in range(n - 1):
        codeg = popcount(words[u + 1:] & words[u]).sum(axis=1).astype(np.int64)
        total += 2 * int((codeg * codeg).sum())
    return total


_combo_cache = {}


def _combos(n):
    if n not in _combo_cache:
        combos = np.array(list(itertools.combinations(range(n), 4)), dtype=np.int64)
        _combo_cache[n] = combos
    return _combo_cache[n]


def c4_enum_count(words, n):
    """Brute force: test all 3 opposite-pair structures of every 4-subset."""
    if n < 4:
        return 0
    adj = unpack_rows(words, n).astype(bool)
    q = _combos(n)
    a, b, c, d = q[:, 0], q[:, 1], q[:, 2], q[:, 3]
    # diagonals {a,b}|{c,d}: cycle a-c-b-d-a
    p1 = adj[a, c] & adj[c, b] & adj[b, d] & adj[d, a]
    # diagonals {a,c}|{b,d}: cycle a-b-c-d-a
    p2 = adj[a, b] & adj[b, c] & adj[c, d] & adj[d, a]
    # diagonals {a,d}|{b,c}: cycle a-b-d-c-a
    p3 = adj[a, b] & adj[b, d] & adj[d, c] & adj[c, a]
    return int(p1.sum()) + int(p2.sum()) + int(p3.sum())


def dense_eigvals(matrix):
    """All eigenvalues of a dense symmetric matrix, sorted descending."""
    vals = np.linalg.eigvalsh(np.asarray(matrix, dtype=np.float64))
    return vals[::-1].copy()
