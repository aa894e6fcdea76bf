# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: all-pairs BFS and the brute-force median triple check."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def all_pairs_distances(int n, const int32_t[::1] indptr, const int32_t[::1] indices):
    """Hop distances from every vertex; -1 marks unreachable pairs."""
    out = np.full((n, n), -1, dtype=np.int32)
    cdef int32_t[:, ::1] d = out
    cdef int32_t[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    cdef int s, head, tail, u, k, w
    with nogil:
        for s in range(n):
            d[s, s] = 0
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                for k in range(indptr[u], indptr[u + 1]):
                    w = indices[k]
                    if d[s, w] < 0:
                        d[s, w] = d[s, u] + 1
                        queue[tail] = w
                        tail += 1
    return out


cdef inline int64_t _pair(int64_t u, int64_t v, int64_t n) nogil:
    # row-major index into the strict upper triangle, u < v
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def median_violation(const int32_t[:, ::1] dist):
    """First triple u < v < w whose median count is not 1, else None.

    Returns ``(u, v, w, count)``.
    """
    cdef int64_t n = dist.shape[0]
    if n < 3:
        return None
    cdef int64_t words = (n + 63) // 64
    cdef int64_t npairs = n * (n - 1) // 2
    cdef uint64_t *iv = <uint64_t *> malloc(npairs * words * sizeof(uint64_t))
    if iv == NULL:
        raise MemoryError("interval bitsets do not fit in memory")
    cdef int64_t u, v, w, x, k, base, duv
    cdef uint64_t *a
    cdef uint64_t *b
    cdef uint64_t *c
    cdef int count = 0
    cdef int64_t bu = -1, bv = -1, bw = -1
    try:
        with nogil:
            for u in range(n):
                for v in range(u + 1, n):
                    base = _pair(u, v, n) * words
                    for k in range(words):
                        iv[base + k] = 0
                    duv = dist[u, v]
                    for x in range(n):
                        if dist[u, x] + dist[x, v] == duv:
                            iv[base + x // 64] |= (<uint64_t> 1) << (x % 64)
            for u in range(n):
                for v in range(u + 1, n):
                    a = iv + _pair(u, v, n) * words
                    for w in range(v + 1, n):
                        b = iv + _pair(u, w, n) * words
                        c = iv + _pair(v, w, n) * words
                        count = 0
                        for k in range(words):
                            count += __builtin_popcountll(a[k] & b[k] & c[k])
                        if count != 1:
                            bu = u
                            bv = v
                            bw = w
                            break
                    if bu >= 0:
                        break
                if bu >= 0:
                    break
    finally:
        free(iv)
    if bu >= 0:
        return (int(bu), int(bv), int(bw), count)
    return None
