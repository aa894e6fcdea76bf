"""Catacondensed even ring systems: declarative specs, realization, geometry.

A spec describes the inner faces of a cers as a tree. Each face has an even
length and a list of attachments, one per neighbouring face, giving the
position of the shared edge in the face's counterclockwise edge cycle.
Non-root faces always keep the edge shared with their tree parent at
position 0.
"""

from __future__ import annotations

import enum
import json
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator


class CersError(ValueError):
    """Raised for invalid specs or violated operation preconditions."""


@dataclass(frozen=True)
class Attachment:
    neighbor: str
    position: int


@dataclass(frozen=True)
class FaceSpec:
    id: str
    length: int
    attachments: tuple[Attachment, ...] = ()

    def position_of(self, neighbor: str) -> int:
        for att in self.attachments:
            if att.neighbor == neighbor:
                return att.position
        raise CersError(f"face {self.id!r} is not attached to {neighbor!r}")

    @property
    def neighbors(self) -> tuple[str, ...]:
        return tuple(att.neighbor for att in self.attachments)

    def sorted_attachments(self) -> list[Attachment]:
        return sorted(self.attachments, key=lambda a: a.position)


def natural_key(face_id: str) -> tuple:
    """Sort key that orders ``F2`` before ``F10``."""
    return tuple(
        (0, int(tok), "") if tok.isdigit() else (1, 0, tok)
        for tok in re.findall(r"\d+|\D+", face_id)
    )


@dataclass(frozen=True)
class CersSpec:
    faces: tuple[FaceSpec, ...]
    root: str
    canonical: bool = False

    @cached_property
    def _by_id(self) -> dict[str, FaceSpec]:
        return {f.id: f for f in self.faces}

    def face(self, face_id: str) -> FaceSpec:
        try:
            return self._by_id[face_id]
        except KeyError:
            raise CersError(f"unknown face {face_id!r}") from None

    @property
    def face_ids(self) -> tuple[str, ...]:
        return tuple(f.id for f in self.faces)

    def __len__(self) -> int:
        return len(self.faces)

    def adjacency(self) -> dict[str, tuple[str, ...]]:
        """Inner dual as declared by the attachment lists (ids naturally sorted)."""
        return {
            f.id: tuple(sorted(set(f.neighbors), key=natural_key)) for f in self.faces
        }

    def degree(self, face_id: str) -> int:
        return len(self.face(face_id).attachments)

    def terminal_faces(self) -> list[str]:
        if len(self.faces) == 1:
            return [self.faces[0].id]
        return sorted((f.id for f in self.faces if len(f.attachments) == 1), key=natural_key)

    def replace_face(self, face: FaceSpec) -> CersSpec:
        faces = tuple(face if f.id == face.id else f for f in self.faces)
        return CersSpec(faces, self.root)

    # serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        out: dict = {
            "root": self.root,
            "faces": [
                {
                    "id": f.id,
                    "length": f.length,
                    "attachments": [
                        {"neighbor": a.neighbor, "position": a.position}
                        for a in f.attachments
                    ],
                }
                for f in self.faces
            ],
        }
        if self.canonical:
            out["canonical"] = True
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> CersSpec:
        try:
            faces = tuple(
                FaceSpec(
                    id=str(f["id"]),
                    length=int(f["length"]),
                    attachments=tuple(
                        Attachment(str(a["neighbor"]), int(a["position"]))
                        for a in f.get("attachments", [])
                    ),
                )
                for f in data["faces"]
            )
            root = str(data["root"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CersError(f"malformed cers spec: {exc}") from exc
        return cls(faces, root, bool(data.get("canonical", False)))

    @classmethod
    def from_json(cls, text: str) -> CersSpec:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CersError(f"malformed JSON: {exc}") from exc
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: str | Path) -> CersSpec:
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    face: str | None
    rule: str
    detail: str = ""

    def __str__(self) -> str:
        where = f"face {self.face}: " if self.face is not None else ""
        return f"{where}{self.rule}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def __bool__(self) -> bool:
        return self.ok


def _cyclically_adjacent(a: int, b: int, length: int) -> bool:
    return (a - b) % length in (1, length - 1)


def validate_spec(spec: CersSpec) -> ValidationReport:
    report = ValidationReport()
    add = lambda face, rule, detail="": report.violations.append(Violation(face, rule, detail))  # noqa: E731

    if not spec.faces:
        add(None, "no faces")
        return report
    ids = [f.id for f in spec.faces]
    if len(set(ids)) != len(ids):
        add(None, "duplicate face id")
        return report
    by_id = {f.id: f for f in spec.faces}
    if spec.root not in by_id:
        add(None, "unknown root", spec.root)
        return report

    for f in spec.faces:
        if f.length % 2:
            add(f.id, "odd face length", str(f.length))
        if f.length < 4:
            add(f.id, "face too short", str(f.length))
        positions = [a.position for a in f.attachments]
        if any(not 0 <= p < f.length for p in positions):
            add(f.id, "position out of range")
            continue
        if len(set(positions)) != len(positions):
            add(f.id, "duplicate attachment position")
        nbrs = [a.neighbor for a in f.attachments]
        if len(set(nbrs)) != len(nbrs):
            add(f.id, "duplicate neighbor")
        for i, p in enumerate(positions):
            for q in positions[i + 1 :]:
                if _cyclically_adjacent(p, q, f.length):
                    add(f.id, "adjacent shared edges", f"{p},{q}")
        for nb in nbrs:
            if nb == f.id:
                add(f.id, "self attachment")
            elif nb not in by_id:
                add(f.id, "unknown neighbor", nb)
            elif f.id not in by_id[nb].neighbors:
                add(f.id, "asymmetric attachment", nb)
    if not report.ok:
        return report

    # tree check: n - 1 undirected edges and connected
    n_edges = sum(len(f.attachments) for f in spec.faces) // 2
    seen = {spec.root}
    parent: dict[str, str | None] = {spec.root: None}
    queue = deque([spec.root])
    while queue:
        cur = queue.popleft()
        for nb in by_id[cur].neighbors:
            if nb not in seen:
                seen.add(nb)
                parent[nb] = cur
                queue.append(nb)
    if len(seen) != len(spec.faces):
        add(None, "inner dual disconnected")
        return report
    if n_edges != len(spec.faces) - 1:
        add(None, "inner dual has a cycle")
        return report

    for f in spec.faces:
        par = parent[f.id]
        if par is not None and f.position_of(par) != 0:
            add(f.id, "parent not at position 0", par)
    return report


def tree_parents(spec: CersSpec, root: str | None = None) -> dict[str, str | None]:
    root = spec.root if root is None else root
    parent: dict[str, str | None] = {root: None}
    queue = deque([root])
    while queue:
        cur = queue.popleft()
        for nb in spec.face(cur).neighbors:
            if nb not in parent:
                parent[nb] = cur
                queue.append(nb)
    return parent


# ---------------------------------------------------------------------------
# realization


class TripleClass(enum.Enum):
    REGULAR = "regular"
    IRREGULAR = "irregular"


@dataclass(frozen=True)
class BoundarySegment:
    face: str
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True, eq=False)
class PlaneCers:
    """A realized cers.

    ``face_vertices[F][k]`` and ``face_vertices[F][k+1]`` are the endpoints of
    ``face_boundaries[F][k]``, both listed counterclockwise.
    """

    spec: CersSpec
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    face_vertices: dict[str, tuple[int, ...]]
    face_boundaries: dict[str, tuple[int, ...]]
    outer_boundary: tuple[int, ...]

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def face_ids(self) -> tuple[str, ...]:
        return self.spec.face_ids

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for idx, (u, v) in enumerate(self.edges):
            inc[u].append(idx)
            inc[v].append(idx)
        return tuple(tuple(sorted(i)) for i in inc)

    @cached_property
    def edge_faces(self) -> tuple[tuple[str, ...], ...]:
        owners: list[list[str]] = [[] for _ in self.edges]
        for fid, cycle in self.face_boundaries.items():
            for e in cycle:
                owners[e].append(fid)
        return tuple(tuple(o) for o in owners)

    @cached_property
    def face_masks(self) -> dict[str, int]:
        """Edge set of every inner face as an integer bitmask (bit i = edge i)."""
        return {fid: sum(1 << e for e in cyc) for fid, cyc in self.face_boundaries.items()}

    def shared_edge(self, f1: str, f2: str) -> int:
        common = set(self.face_boundaries[f1]) & set(self.face_boundaries[f2])
        if len(common) != 1 or f1 == f2:
            raise CersError(f"faces {f1!r} and {f2!r} are not adjacent")
        return common.pop()

    def position(self, face: str, edge: int) -> int:
        return self.face_boundaries[face].index(edge)


def realize(spec: CersSpec) -> PlaneCers:
    report = validate_spec(spec)
    if not report.ok:
        raise CersError("invalid spec: " + "; ".join(map(str, report.violations)))

    edges: list[tuple[int, int]] = []
    face_vertices: dict[str, tuple[int, ...]] = {}
    face_boundaries: dict[str, tuple[int, ...]] = {}

    def new_edge(u: int, v: int) -> int:
        edges.append((min(u, v), max(u, v)))
        return len(edges) - 1

    root = spec.face(spec.root)
    verts = tuple(range(root.length))
    n_vertices = root.length
    face_vertices[root.id] = verts
    face_boundaries[root.id] = tuple(
        new_edge(verts[k], verts[(k + 1) % root.length]) for k in range(root.length)
    )

    # depth-first, children in ascending attachment position
    stack: list[tuple[str, str]] = []

    def push_children(fid: str, parent: str | None) -> None:
        kids = [a for a in spec.face(fid).sorted_attachments() if a.neighbor != parent]
        for att in reversed(kids):
            stack.append((att.neighbor, fid))

    push_children(root.id, None)
    while stack:
        fid, par = stack.pop()
        face = spec.face(fid)
        p = spec.face(par).position_of(fid)
        pv = face_vertices[par]
        a, b = pv[p], pv[(p + 1) % len(pv)]
        fresh = tuple(range(n_vertices, n_vertices + face.length - 2))
        n_vertices += face.length - 2
        cv = (b, a) + fresh
        cyc = [face_boundaries[par][p]]
        for k in range(1, face.length):
            cyc.append(new_edge(cv[k], cv[(k + 1) % face.length]))
        face_vertices[fid] = cv
        face_boundaries[fid] = tuple(cyc)
        push_children(fid, par)

    # outer boundary: edges on exactly one face form a Hamiltonian cycle
    count = [0] * len(edges)
    for cyc in face_boundaries.values():
        for e in cyc:
            count[e] += 1
    outer_edges = [e for e, c in enumerate(count) if c == 1]
    if len(spec.faces) == 1:
        outer = face_boundaries[root.id]
    else:
        by_vertex: dict[int, list[int]] = {}
        for e in outer_edges:
            for v in edges[e]:
                by_vertex.setdefault(v, []).append(e)
        start = min(outer_edges)
        walk = [start]
        cur = edges[start][1]
        while True:
            nxt = [e for e in by_vertex[cur] if e != walk[-1]]
            if nxt[0] == start:
                break
            walk.append(nxt[0])
            u, v = edges[nxt[0]]
            cur = v if u == cur else u
        outer = tuple(walk)

    return PlaneCers(
        spec=spec,
        n_vertices=n_vertices,
        edges=tuple(edges),
        face_vertices=face_vertices,
        face_boundaries=face_boundaries,
        outer_boundary=tuple(outer),
    )


# ---------------------------------------------------------------------------
# geometric queries


def inner_dual(plane: PlaneCers) -> dict[str, tuple[str, ...]]:
    """Face-adjacency graph recomputed from the realized edge sets."""
    adj: dict[str, set[str]] = {fid: set() for fid in plane.face_ids}
    for owners in plane.edge_faces:
        if len(owners) == 2:
            a, b = owners
            adj[a].add(b)
            adj[b].add(a)
    return {fid: tuple(sorted(nb, key=natural_key)) for fid, nb in adj.items()}


def shared_positions(plane: PlaneCers, face: str) -> list[int]:
    cyc = plane.face_boundaries[face]
    return [k for k, e in enumerate(cyc) if len(plane.edge_faces[e]) == 2]


def boundary_segments(plane: PlaneCers, face: str) -> list[BoundarySegment]:
    """Maximal runs of outer-boundary edges of ``face``.

    Segment ``s`` starts right after the ``s``-th shared edge in position
    order, so the segment index is stable under edits of other segments.
    """
    cyc = plane.face_boundaries[face]
    shared = shared_positions(plane, face)
    if not shared:
        return [BoundarySegment(face, cyc)]
    segments = []
    L = len(cyc)
    for s, p in enumerate(shared):
        q = shared[(s + 1) % len(shared)]
        gap = (q - p) % L or L
        segments.append(BoundarySegment(face, tuple(cyc[(p + t) % L] for t in range(1, gap))))
    return segments


def link(plane: PlaneCers, face: str, other: str) -> tuple[int, int]:
    """The two edges of ``face`` that have exactly one endpoint on ``other``."""
    e = plane.shared_edge(face, other)
    cyc = plane.face_boundaries[face]
    p = cyc.index(e)
    return cyc[(p - 1) % len(cyc)], cyc[(p + 1) % len(cyc)]


def vertex_distances(plane: PlaneCers, sources: Iterable[int]) -> list[int]:
    dist = [-1] * plane.n_vertices
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    adj = plane.adjacency
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def edge_distance(plane: PlaneCers, e: int, f: int) -> int:
    """Distance between edges ``e`` and ``f`` in the line graph."""
    if e == f:
        return 0
    dist = vertex_distances(plane, plane.edges[e])
    return 1 + min(dist[v] for v in plane.edges[f])


def classify_triple(plane: PlaneCers, f1: str, f2: str, f3: str) -> TripleClass:
    if f1 == f3:
        raise CersError("triple needs two distinct outer faces")
    e = plane.shared_edge(f1, f2)
    f = plane.shared_edge(f2, f3)
    if edge_distance(plane, e, f) % 2 == 0:
        return TripleClass.REGULAR
    return TripleClass.IRREGULAR


def triples_through(plane: PlaneCers, face: str) -> Iterator[tuple[str, str, str]]:
    nbrs = inner_dual(plane)[face]
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1 :]:
            yield a, face, b
