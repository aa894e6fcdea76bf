"""Small undirected simple graphs on vertices ``0..n-1`` and the structural
checks the resonance verifiers need (girth, cut vertices, isomorphism)."""

from __future__ import annotations

import math
import sys
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from . import kernels


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        es = sorted({(min(u, v), max(u, v)) for u, v in edges})
        if any(u == v or not 0 <= u < n or not 0 <= v < n for u, v in es):
            raise ValueError("edges must join two distinct vertices in range")
        return cls(n, tuple(es))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        indices = []
        for v in range(self.n):
            nb = sorted(self.adj[v])
            indices.extend(nb)
            indptr[v + 1] = indptr[v] + len(nb)
        return indptr, np.asarray(indices, dtype=np.int32)

    @cached_property
    def distances(self) -> np.ndarray:
        """All-pairs hop distances (``-1`` where unreachable)."""
        indptr, indices = self.csr
        return kernels.all_pairs_distances(self.n, indptr, indices)

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled; also returns new-index -> old-vertex."""
        old = sorted(set(keep))
        new = {v: i for i, v in enumerate(old)}
        es = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph.from_edges(len(old), es), old

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return bool((g.distances[0] >= 0).all())


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_path(g: Graph) -> bool:
    return (
        is_connected(g)
        and len(g.edges) == g.n - 1
        and all(g.degree(v) <= 2 for v in range(g.n))
    )


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def degree_one_vertices(g: Graph) -> set[int]:
    return {v for v in range(g.n) if g.degree(v) == 1}


def articulation_points(g: Graph) -> set[int]:
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            u, par, it = stack[-1]
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(sorted(g.adj[w]))))
                    if u == root:
                        root_children += 1
                    break
                if w != par:
                    low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p != root and low[u] >= disc[p]:
                        cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


def two_connected_after_leaf_removal(g: Graph) -> bool:
    """Whether ``g`` minus its degree-one vertices is 2-connected."""
    keep = set(range(g.n)) - degree_one_vertices(g)
    if not keep:
        raise ValueError("nothing left after removing degree-one vertices")
    residual, _ = g.induced(keep)
    return is_two_connected(residual)


# ---------------------------------------------------------------------------
# isomorphism


def _initial_colors(g: Graph) -> list[tuple]:
    d = g.distances
    return [
        (g.degree(v), tuple(sorted(Counter(int(x) for x in d[v]).items())))
        for v in range(g.n)
    ]


def _refine(graphs: list[Graph], colors: list[list]) -> list[list[int]]:
    """Joint colour refinement so colour ids are comparable across graphs."""
    cur = colors
    while True:
        sigs = [
            [(c[v], tuple(sorted(c[w] for w in g.adj[v]))) for v in range(g.n)]
            for g, c in zip(graphs, cur)
        ]
        palette = {s: i for i, s in enumerate(sorted({s for sg in sigs for s in sg}))}
        nxt = [[palette[s] for s in sg] for sg in sigs]
        n_before = len({x for c in cur for x in c})
        if len(palette) == n_before:
            return nxt
        cur = nxt


def find_isomorphism(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """An isomorphism ``g1 -> g2`` as a vertex dict, or ``None``."""
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return None
    if g1.n == 0:
        return {}
    c1, c2 = _refine([g1, g2], [_initial_colors(g1), _initial_colors(g2)])
    if Counter(c1) != Counter(c2):
        return None

    # order g1's vertices: rarest colour first, then BFS so each new vertex
    # has mapped neighbours where possible
    freq = Counter(c1)
    order: list[int] = []
    placed = [False] * g1.n
    while len(order) < g1.n:
        start = min((v for v in range(g1.n) if not placed[v]), key=lambda v: (freq[c1[v]], v))
        placed[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(g1.adj[u], key=lambda w: (freq[c1[w]], w)):
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)

    by_color: dict[int, list[int]] = {}
    for v in range(g2.n):
        by_color.setdefault(c2[v], []).append(v)
    d1, d2 = g1.distances, g2.distances
    fwd: dict[int, int] = {}
    used = [False] * g2.n
    anchors: list[int] = []

    def candidates(u: int) -> list[int]:
        mapped_nb = [w for w in g1.adj[u] if w in fwd]
        if mapped_nb:
            pool = set(g2.adj[fwd[mapped_nb[0]]])
            for w in mapped_nb[1:]:
                pool &= g2.adj[fwd[w]]
            pool = sorted(v for v in pool if c2[v] == c1[u])
        else:
            pool = by_color[c1[u]]
        out = []
        for v in pool:
            if used[v]:
                continue
            if sum(1 for w in g2.adj[v] if used[w]) != len(mapped_nb):
                continue
            if any(d1[u, a] != d2[v, fwd[a]] for a in anchors):
                continue
            out.append(v)
        return out

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        u = order[k]
        for v in candidates(u):
            fwd[u] = v
            used[v] = True
            new_anchor = len(anchors) < 4
            if new_anchor:
                anchors.append(u)
            if extend(k + 1):
                return True
            if new_anchor:
                anchors.pop()
            used[v] = False
            del fwd[u]
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, g1.n + 1000))
    try:
        found = extend(0)
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        return None
    assert all(g2.has_edge(fwd[u], fwd[v]) for u, v in g1.edges)
    return fwd


def graph_isomorphic(g1: Graph, g2: Graph) -> tuple[bool, dict[int, int] | None]:
    iso = find_isomorphism(g1, g2)
    return iso is not None, iso
