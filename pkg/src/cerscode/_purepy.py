"""Pure-Python versions of the compiled kernels (same signatures and results)."""

from __future__ import annotations

from collections import deque

import numpy as np


def all_pairs_distances(n, indptr, indices):
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    rows = []
    for s in range(n):
        d = [-1] * n
        d[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = d[u] + 1
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if d[w] < 0:
                    d[w] = du
                    queue.append(w)
        rows.append(d)
    return np.array(rows, dtype=np.int32).reshape(n, n)


def median_violation(dist):
    n = len(dist)
    if n < 3:
        return None
    rows = [list(map(int, r)) for r in dist]
    # layer[u][k]: bitset of vertices at distance k from u
    layers = []
    for u in range(n):
        by_d: dict[int, int] = {}
        for x, dx in enumerate(rows[u]):
            by_d[dx] = by_d.get(dx, 0) | 1 << x
        layers.append(by_d)

    def interval(u, v):
        duv = rows[u][v]
        lu, lv = layers[u], layers[v]
        bits = 0
        for k in range(duv + 1):
            bits |= lu.get(k, 0) & lv.get(duv - k, 0)
        return bits

    iv = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            iv[u][v] = interval(u, v)
    for u in range(n):
        row_u = iv[u]
        for v in range(u + 1, n):
            a = row_u[v]
            row_v = iv[v]
            for w in range(v + 1, n):
                count = (a & row_u[w] & row_v[w]).bit_count()
                if count != 1:
                    return (u, v, w, count)
    return None
