# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: codegree / closed-walk counting, 4-subset enumeration,
and a cyclic Jacobi eigensolver for dense symmetric matrices.

Counting is exact integer arithmetic; with the n <= 4096 vertex cap all
totals stay far below the int64 limit.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

LANE = "compiled"

cdef extern from *:
    """
    static inline unsigned long long qs_popcll(unsigned long long x) {
    #if defined(__GNUC__) || defined(__clang__)
        return (unsigned long long)__builtin_popcountll(x);
    #else
        x = x - ((x >> 1) & 0x5555555555555555ULL);
        x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL);
        x = (x + (x >> 4)) & 0x0f0f0f0f0f0f0f0fULL;
        return (x * 0x0101010101010101ULL) >> 56;
    #endif
    }
    """
    unsigned long long qs_popcll(unsigned long long x) nogil


def c4_codegree_count(const unsigned long long[:, ::1] words, Py_ssize_t n):
    """Number of 4-cycle subgraphs via pairwise codegrees."""
    cdef Py_ssize_t u, v, w, width = words.shape[1]
    cdef unsigned long long c
    cdef long long total = 0
    with nogil:
        for u in range(n - 1):
            for v in range(u + 1, n):
                c = 0
                for w in range(width):
                    c += qs_popcll(words[u, w] & words[v, w])
                total += <long long>(c * (c - 1)) // 2
    if total % 2:
        raise AssertionError("codegree pair sum must be even")
    return total // 2


def closed_walk4_total(const unsigned long long[:, ::1] words,
                       const long long[::1] degrees, Py_ssize_t n):
    """tr A^4 as the sum of squared codegrees over ordered vertex pairs."""
    cdef Py_ssize_t u, v, w, width = words.shape[1]
    cdef unsigned long long c
    cdef long long total = 0
    with nogil:
        for u in range(n):
            total += degrees[u] * degrees[u]
        for u in range(n - 1):
            for v in range(u + 1, n):
                c = 0
                for w in range(width):
                    c += qs_popcll(words[u, w] & words[v, w])
                total += 2 * <long long>(c * c)
    return total


cdef inline bint _has(const unsigned long long[:, ::1] words,
                      Py_ssize_t u, Py_ssize_t v) nogil:
    return (words[u, v >> 6] >> (<unsigned long long>(v & 63))) & 1ULL


def c4_enum_count(const unsigned long long[:, ::1] words, Py_ssize_t n):
    """Brute force: test all 3 opposite-pair structures of every 4-subset."""
    cdef Py_ssize_t a, b, c, d
    cdef long long total = 0
    cdef bint ab, ac, ad, bc, bd, cd
    with nogil:
        for a in range(n - 3):
            for b in range(a + 1, n - 2):
                ab = _has(words, a, b)
                for c in range(b + 1, n - 1):
                    ac = _has(words, a, c)
                    bc = _has(words, b, c)
                    for d in range(c + 1, n):
                        ad = _has(words, a, d)
                        bd = _has(words, b, d)
                        cd = _has(words, c, d)
                        if ac and bc and bd and ad:   # diagonals {a,b}|{c,d}
                            total += 1
                        if ab and bc and cd and ad:   # diagonals {a,c}|{b,d}
                            total += 1
                        if ab and bd and cd and ac:   # diagonals {a,d}|{b,c}
                            total += 1
    return total


def jacobi_eigvals(matrix, double off_tol=1e-12, int max_sweeps=100):
    """Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm is <= off_tol; returns the
    eigenvalues sorted descending, or None if the cap is hit first.
    """
    a_arr = np.array(matrix, dtype=np.float64, copy=True, order="C")
    cdef double[:, ::1] a = a_arr
    cdef Py_ssize_t n = a_arr.shape[0], p, q, k
    cdef int sweep
    cdef double off, apq, app, aqq, tau, t, cs, sn, akp, akq
    if n < 2:
        return np.diagonal(a_arr).copy()
    cdef bint converged = False
    with nogil:
        for sweep in range(max_sweeps):
            off = 0.0
            for p in range(n - 1):
                for q in range(p + 1, n):
                    off += 2.0 * a[p, q] * a[p, q]
            off = sqrt(off)
            if off <= off_tol:
                converged = True
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    app = a[p, p]
                    aqq = a[q, q]
                    tau = (aqq - app) / (2.0 * apq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                    cs = 1.0 / sqrt(1.0 + t * t)
                    sn = t * cs
                    for k in range(n):
                        if k == p or k == q:
                            continue
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = cs * akp - sn * akq
                        a[p, k] = a[k, p]
                        a[k, q] = sn * akp + cs * akq
                        a[q, k] = a[k, q]
                    a[p, p] = app - t * apq
                    a[q, q] = aqq + t * apq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
        if not converged:
            off = 0.0
            for p in range(n - 1):
                for q in range(p + 1, n):
                    off += 2.0 * a[p, q] * a[p, q]
            off = sqrt(off)
            converged = off <= off_tol
    if not converged:
        return None
    vals = np.sort(np.diagonal(a_arr))[::-1].copy()
    return vals


def dense_eigvals(matrix):
    """All eigenvalues of a dense symmetric matrix, sorted descending."""
    vals = jacobi_eigvals(matrix)
    if vals is None:
        raise RuntimeError("jacobi sweep cap reached before tolerance")
    return vals
