"""Well-ordered face numbering and binary codes for perfect matchings.

Bit ``k`` of a code (``k = 1`` leftmost) belongs to face ``F_k`` of the
ordering. Codes are built face by face: for a face ``F_k`` glued to an
earlier face ``F_j``, every code ``x`` of the smaller system gets ``x0``,
and ``x1`` is added for those ``x`` whose matching contains the shared edge
of ``F_j`` and ``F_k``. Whether that is ``x_j = 0`` or ``x_j = 1`` depends
only on the parity of the edge distance between the two shared edges of
``F_j`` involved (regular vs irregular triple).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph
from .model import (
    CersError,
    CersSpec,
    PlaneCers,
    TripleClass,
    classify_triple,
)


class CodingConsistencyError(AssertionError):
    """The constructed matchings disagree with the regular/irregular rule."""


@dataclass(frozen=True)
class FaceOrdering:
    faces: tuple[str, ...]
    strategy: str
    root: str

    def index(self) -> dict[str, int]:
        """Face id -> 1-based position."""
        return {f: k + 1 for k, f in enumerate(self.faces)}

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class CodeSet:
    codes: tuple[str, ...]
    ordering: FaceOrdering

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self):
        return iter(self.codes)

    def __contains__(self, code: str) -> bool:
        return code in self.codes

    def as_set(self) -> frozenset[str]:
        return frozenset(self.codes)

    def to_text(self) -> str:
        return "".join(c + "\n" for c in self.codes)


@dataclass(frozen=True)
class CodedMatchingMap:
    codes: tuple[str, ...]
    matchings: tuple[int, ...]
    ordering: FaceOrdering

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.codes, self.matchings))

    def code_set(self) -> CodeSet:
        return CodeSet(self.codes, self.ordering)


def default_root(spec: CersSpec) -> str:
    """Smallest terminal face id."""
    return spec.terminal_faces()[0]


def well_order_faces(spec: CersSpec, root: str | None = None, strategy: str = "bfs") -> FaceOrdering:
    root = default_root(spec) if root is None else root
    spec.face(root)
    if len(spec) > 1 and spec.degree(root) != 1:
        raise CersError(f"root {root!r} is not a terminal face")
    adj = spec.adjacency()
    strategy = strategy.lower()
    if strategy == "bfs":
        order = [root]
        seen = {root}
        queue = deque([root])
        while queue:
            cur = queue.popleft()
            for nb in adj[cur]:
                if nb not in seen:
                    seen.add(nb)
                    order.append(nb)
                    queue.append(nb)
    elif strategy == "dfs":
        order = []
        seen = set()
        stack = [root]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            order.append(cur)
            stack.extend(nb for nb in reversed(adj[cur]) if nb not in seen)
    else:
        raise CersError(f"unknown ordering strategy {strategy!r}")
    return FaceOrdering(tuple(order), strategy, root)


def check_ordering(spec: CersSpec, ordering: FaceOrdering) -> None:
    if sorted(ordering.faces) != sorted(spec.face_ids):
        raise CersError("ordering is not a permutation of the faces")
    if ordering.faces[0] != ordering.root:
        raise CersError("ordering does not start at its root")
    if len(spec) > 1 and spec.degree(ordering.root) != 1:
        raise CersError("ordering root is not terminal")
    idx = ordering.index()
    for f in ordering.faces[1:]:
        earlier = [nb for nb in spec.face(f).neighbors if idx[nb] < idx[f]]
        if len(earlier) != 1:
            raise CersError(f"ordering is not well-ordered at face {f!r}")


def _steps(plane: PlaneCers, ordering: FaceOrdering):
    """Yield ``(k, j, fk, fj, regular)`` for k = 3..n (1-based indices)."""
    spec = plane.spec
    idx = ordering.index()
    for k in range(3, len(ordering) + 1):
        fk = ordering.faces[k - 1]
        fj = min((nb for nb in spec.face(fk).neighbors), key=idx.__getitem__)
        j = idx[fj]
        fi = ordering.faces[min(idx[nb] for nb in spec.face(fj).neighbors) - 1]
        regular = classify_triple(plane, fi, fj, fk) is TripleClass.REGULAR
        yield k, j, fk, fj, regular


def binary_codes(plane: PlaneCers, ordering: FaceOrdering) -> CodeSet:
    check_ordering(plane.spec, ordering)
    if len(ordering) == 1:
        return CodeSet(("0", "1"), ordering)
    codes = ["00", "01", "10"]
    for _k, j, _fk, _fj, regular in _steps(plane, ordering):
        want = "0" if regular else "1"
        nxt = []
        for x in codes:
            nxt.append(x + "0")
            if x[j - 1] == want:
                nxt.append(x + "1")
        codes = nxt
    return CodeSet(tuple(codes), ordering)


def _alternating(cycle: tuple[int, ...], start: int) -> int:
    """Mask of every second edge of ``cycle`` starting at position ``start``."""
    L = len(cycle)
    mask = 0
    for t in range(0, L, 2):
        mask |= 1 << cycle[(start + t) % L]
    return mask


def coded_matchings(plane: PlaneCers, ordering: FaceOrdering) -> CodedMatchingMap:
    """Build the matching of every code alongside the codes themselves."""
    check_ordering(plane.spec, ordering)
    fb = plane.face_boundaries
    masks = plane.face_masks
    faces = ordering.faces

    if len(faces) == 1:
        cyc = fb[faces[0]]
        zero = _alternating(cyc, cyc.index(min(cyc)))
        return CodedMatchingMap(("0", "1"), (zero, zero ^ masks[faces[0]]), ordering)

    f1, f2 = faces[0], faces[1]
    e = plane.shared_edge(f1, f2)
    m00 = _alternating(fb[f1], fb[f1].index(e)) | _alternating(fb[f2], fb[f2].index(e))
    codes = ["00", "01", "10"]
    mats = [m00, m00 ^ masks[f2], m00 ^ masks[f1]]

    for k, j, fk, fj, regular in _steps(plane, ordering):
        e = plane.shared_edge(fj, fk)
        cyc = fb[fk]
        # new path of F_k matched alternately, leaving the shared edge out
        ext = _alternating(cyc, cyc.index(e)) & ~(1 << e)
        want = "0" if regular else "1"
        nxt_codes, nxt_mats = [], []
        for x, m in zip(codes, mats):
            base = m | ext
            eligible = x[j - 1] == want
            if eligible != bool(m >> e & 1):
                raise CodingConsistencyError(
                    f"step {k} ({fk} on {fj}): code {x} eligible={eligible} "
                    f"but shared edge {e} in matching={bool(m >> e & 1)}"
                )
            nxt_codes.append(x + "0")
            nxt_mats.append(base)
            if eligible:
                nxt_codes.append(x + "1")
                nxt_mats.append(base ^ masks[fk])
        codes, mats = nxt_codes, nxt_mats
    return CodedMatchingMap(tuple(codes), tuple(mats), ordering)


def code_graph(codes):
    """Hypercube-induced graph on the codes (Hamming distance 1 = edge)."""
    codes = list(codes)
    index = {c: i for i, c in enumerate(codes)}
    edges = []
    for i, c in enumerate(codes):
        for p in range(len(c)):
            flipped = c[:p] + ("1" if c[p] == "0" else "0") + c[p + 1 :]
            t = index.get(flipped)
            if t is not None and t > i:
                edges.append((i, t))
    return Graph.from_edges(len(codes), edges)
