"""Perfect matching enumeration and the link property.

Matchings are integer bitmasks over edge indices (bit ``i`` set iff edge
``i`` is in the matching).
"""

from __future__ import annotations

from .model import CersError, PlaneCers, inner_dual, link


def edges_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(edges) -> int:
    m = 0
    for e in edges:
        m |= 1 << e
    return m


def canonical_key(mask: int, n_edges: int) -> str:
    """Bit-vector string ``b0 b1 ... b(m-1)``; sorting these is the canonical order."""
    return "".join("1" if mask >> i & 1 else "0" for i in range(n_edges))


def enumerate_perfect_matchings(plane: PlaneCers) -> list[int]:
    """All perfect matchings, lexicographic on the edge bit vector."""
    n = plane.n_vertices
    inc = plane.incident_edges
    edges = plane.edges
    found: list[int] = []
    covered = [False] * n

    def search(start: int, mask: int) -> None:
        v = start
        while v < n and covered[v]:
            v += 1
        if v == n:
            found.append(mask)
            return
        covered[v] = True
        for e in inc[v]:
            a, b = edges[e]
            w = b if a == v else a
            if not covered[w]:
                covered[w] = True
                search(v + 1, mask | 1 << e)
                covered[w] = False
        covered[v] = False

    search(0, 0)
    if not found:
        raise RuntimeError("no perfect matching found for a validated cers")
    found.sort(key=lambda m: canonical_key(m, plane.n_edges))
    return found


def is_perfect_matching(plane: PlaneCers, mask: int) -> bool:
    if mask >> plane.n_edges:
        return False
    seen = [0] * plane.n_vertices
    for e in edges_of(mask):
        for v in plane.edges[e]:
            seen[v] += 1
    return all(c == 1 for c in seen)


def check_link_property(plane: PlaneCers, mask: int) -> bool:
    """True iff every link has both or none of its edges in the matching."""
    if not is_perfect_matching(plane, mask):
        raise CersError("edge set is not a perfect matching")
    for face, nbrs in inner_dual(plane).items():
        for other in nbrs:
            e1, e2 = link(plane, face, other)
            if bool(mask >> e1 & 1) != bool(mask >> e2 & 1):
                return False
    return True
