"""Resonance graphs and the structural verifiers run on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import kernels
from .graphs import (
    Graph,
    degree_one_vertices,
    find_isomorphism,
    girth,
    is_bipartite,
    is_connected,
    is_path,
    two_connected_after_leaf_removal,
)
from .matching import edges_of
from .model import PlaneCers

# brute-force triple check keeps V^3/16 bytes of interval bitsets
MAX_MEDIAN_VERTICES = 2000

__all__ = [
    "MAX_MEDIAN_VERTICES",
    "ResonanceGraph",
    "build_resonance_graph",
    "degree_one_vertices",
    "girth",
    "graph_isomorphic",
    "is_median_graph",
    "median_violation",
    "two_connected_after_leaf_removal",
    "verify_isometric_embedding",
]


@dataclass(frozen=True, eq=False)
class ResonanceGraph:
    matchings: tuple[int, ...]
    edges: tuple[tuple[int, int, str], ...]
    codes: tuple[str, ...] | None = field(default=None)

    @property
    def n(self) -> int:
        return len(self.matchings)

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, ((u, v) for u, v, _ in self.edges))

    def with_codes(self, codes: Sequence[str]) -> ResonanceGraph:
        if len(codes) != self.n:
            raise ValueError("one code per matching required")
        return ResonanceGraph(self.matchings, self.edges, tuple(codes))

    def label(self, v: int) -> str:
        return self.codes[v] if self.codes is not None else str(v)

    def to_dict(self) -> dict:
        return {
            "vertices": [
                {"index": i, "label": self.label(i), "matching": edges_of(m)}
                for i, m in enumerate(self.matchings)
            ],
            "edges": [{"source": u, "target": v, "face": f} for u, v, f in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["graph resonance {"]
        for i in range(self.n):
            lines.append(f'  {i} [label="{self.label(i)}"];')
        for u, v, f in self.edges:
            lines.append(f'  {u} -- {v} [label="{f}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_resonance_graph(plane: PlaneCers, matchings: Sequence[int]) -> ResonanceGraph:
    """Join two matchings iff their symmetric difference is one inner face."""
    face_of_mask = {mask: fid for fid, mask in plane.face_masks.items()}
    edges = []
    for i, a in enumerate(matchings):
        for j in range(i + 1, len(matchings)):
            fid = face_of_mask.get(a ^ matchings[j])
            if fid is not None:
                edges.append((i, j, fid))
    return ResonanceGraph(tuple(matchings), tuple(edges))


def _as_graph(g) -> Graph:
    return g.graph() if isinstance(g, ResonanceGraph) else g


def median_violation(g) -> tuple[int, int, int, int] | None:
    """A triple whose number of medians is not exactly one, with that count."""
    g = _as_graph(g)
    if not is_connected(g):
        raise ValueError("median check needs a connected graph")
    if g.n > MAX_MEDIAN_VERTICES:
        raise ValueError(
            f"graph has {g.n} vertices; brute-force median check is limited to "
            f"{MAX_MEDIAN_VERTICES}"
        )
    return kernels.median_violation(np.ascontiguousarray(g.distances))


def is_median_graph(g) -> bool:
    return median_violation(g) is None


def hamming_matrix(codes: Sequence[str]) -> np.ndarray:
    bits = np.array([[c == "1" for c in code] for code in codes], dtype=np.int32)
    if bits.ndim != 2:
        bits = bits.reshape(len(codes), -1)
    return (bits[:, None, :] != bits[None, :, :]).sum(axis=2)


def verify_isometric_embedding(
    g, codes: Sequence[str], assignment: Mapping[str, int] | None = None
) -> bool:
    """Graph distance equals Hamming distance for every vertex pair.

    ``assignment`` maps each code to a vertex; by default code ``i`` labels
    vertex ``i``.
    """
    g = _as_graph(g)
    codes = list(codes)
    if len(codes) != g.n:
        raise ValueError(f"{len(codes)} codes for {g.n} vertices")
    if len(set(codes)) != len(codes):
        raise ValueError("duplicate codes")
    if len({len(c) for c in codes}) > 1:
        raise ValueError("codes of different lengths")
    if assignment is None:
        order = list(range(g.n))
    else:
        order = [assignment[c] for c in codes]
        if sorted(order) != list(range(g.n)):
            raise ValueError("assignment is not a bijection onto the vertices")
    d = g.distances[np.ix_(order, order)]
    return bool((d == hamming_matrix(codes)).all())


def graph_isomorphic(g1, g2) -> tuple[bool, dict[int, int] | None]:
    iso = find_isomorphism(_as_graph(g1), _as_graph(g2))
    return iso is not None, iso


@dataclass
class BenzenoidCheck:
    """Girth-4 / leaf-removed 2-connectivity condition for non-path graphs."""

    is_path: bool
    girth: float
    residual_two_connected: bool | None

    @property
    def holds(self) -> bool:
        return self.is_path or (self.girth == 4 and bool(self.residual_two_connected))


def benzenoid_condition(g) -> BenzenoidCheck:
    g = _as_graph(g)
    if is_path(g):
        return BenzenoidCheck(True, girth(g), None)
    return BenzenoidCheck(False, girth(g), two_connected_after_leaf_removal(g))


def basic_shape_ok(g) -> bool:
    g = _as_graph(g)
    return is_connected(g) and is_bipartite(g)

