"""Segment edits, canonical forms, resonant equivalence and normalization.

A boundary segment can be lengthened or shortened by an even number of
edges without changing the resonance graph. The parity of each segment is
therefore all that matters, and the canonical form shrinks every segment to
the shortest length of the same parity that still gives a valid face.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .model import (
    Attachment,
    CersError,
    CersSpec,
    FaceSpec,
    PlaneCers,
    TripleClass,
    classify_triple,
    inner_dual,
    realize,
    tree_parents,
    triples_through,
    validate_spec,
)


@dataclass(frozen=True)
class SegmentEdit:
    face: str
    segment: int
    delta: int


def segment_lengths(face: FaceSpec) -> list[int]:
    """Boundary segment lengths; segment ``s`` follows the ``s``-th attachment by position."""
    pos = sorted(a.position for a in face.attachments)
    if not pos:
        return [face.length]
    k = len(pos)
    return [((pos[(s + 1) % k] - pos[s]) % face.length or face.length) - 1 for s in range(k)]


def apply_transformation(spec: CersSpec, edit: SegmentEdit) -> CersSpec:
    if edit.delta % 2:
        raise CersError("odd delta")
    face = spec.face(edit.face)
    segs = segment_lengths(face)
    if not 0 <= edit.segment < len(segs):
        raise CersError(f"face {face.id!r} has no segment {edit.segment}")
    if segs[edit.segment] + edit.delta < 1:
        raise CersError("segment would drop below length 1")
    if face.length + edit.delta < 4:
        raise CersError("face would drop below length 4")
    if edit.delta == 0:
        return spec

    tokens: list[str | None] = [None] * face.length
    for a in face.attachments:
        tokens[a.position] = a.neighbor
    anchor = sorted(a.position for a in face.attachments)[edit.segment] if face.attachments else face.length - 1
    if edit.delta > 0:
        tokens[anchor + 1 : anchor + 1] = [None] * edit.delta
    else:
        drop = {(anchor + 1 + t) % face.length for t in range(-edit.delta)}
        # survivors keep their cyclic order; index 0 moves to the first survivor
        tokens = [tok for i, tok in enumerate(tokens) if i not in drop]
    where = {tok: i for i, tok in enumerate(tokens) if tok is not None}
    new_face = FaceSpec(
        face.id,
        len(tokens),
        tuple(Attachment(a.neighbor, where[a.neighbor]) for a in face.attachments),
    )
    out = spec.replace_face(new_face)
    assert validate_spec(out).ok, validate_spec(out).violations
    return out


def _min_segment(length: int, n_attachments: int) -> int:
    if n_attachments == 0:
        return 4 if length % 2 == 0 else 5
    if n_attachments == 1:
        return 3 if length % 2 else 4
    return 1 if length % 2 else 2


def canonical_form(spec: CersSpec) -> CersSpec:
    """Every segment at its minimal same-parity length; face ids and tree kept.

    Root positions are rotated so the root's first attachment sits at 0.
    """
    report = validate_spec(spec)
    if not report.ok:
        raise CersError("invalid spec: " + "; ".join(map(str, report.violations)))
    parents = tree_parents(spec)
    faces = []
    for face in spec.faces:
        atts = face.sorted_attachments()
        if not atts:
            faces.append(FaceSpec(face.id, _min_segment(face.length, 0)))
            continue
        segs = [_min_segment(s, len(atts)) for s in segment_lengths(face)]
        # start the cycle at the parent (or, for the root, the first attachment)
        par = parents[face.id]
        start = 0 if par is None else [a.neighbor for a in atts].index(par)
        order = atts[start:] + atts[:start]
        seg_order = segs[start:] + segs[:start]
        pos, new_atts = 0, {}
        for att, seg in zip(order, seg_order):
            new_atts[att.neighbor] = pos
            pos += 1 + seg
        faces.append(
            FaceSpec(
                face.id,
                pos,
                tuple(Attachment(a.neighbor, new_atts[a.neighbor]) for a in face.attachments),
            )
        )
    return CersSpec(tuple(faces), spec.root, canonical=True)


# ---------------------------------------------------------------------------
# plane-tree encoding (up to relabelling, re-rooting and optionally reflection)


def _cyclic_tokens(face: FaceSpec) -> list:
    """``[nb0, seg0, nb1, seg1, ...]`` in position order."""
    atts = face.sorted_attachments()
    segs = segment_lengths(face)
    out: list = []
    for a, s in zip(atts, segs):
        out.extend((a.neighbor, s))
    return out


def _encode_from(spec: CersSpec, face_id: str, start: str | None, reflect: bool, toks_cache) -> str:
    toks = toks_cache[face_id]
    if not toks:
        return f"({spec.face(face_id).length})"
    nbrs = toks[0::2]
    segs = toks[1::2]
    k = len(nbrs)
    r = nbrs.index(start) if start is not None else 0
    parts = []
    if not reflect:
        seq_n = [nbrs[(r + t) % k] for t in range(k)]
        seq_s = [segs[(r + t) % k] for t in range(k)]
    else:
        # walk clockwise: neighbour r, then segment r-1, neighbour r-1, ...
        seq_n = [nbrs[(r - t) % k] for t in range(k)]
        seq_s = [segs[(r - t - 1) % k] for t in range(k)]
    for t, (nb, seg) in enumerate(zip(seq_n, seq_s)):
        if t == 0 and start is not None:
            parts.append("^")
        else:
            parts.append(_encode_from(spec, nb, face_id, reflect, toks_cache))
        parts.append(str(seg))
    return "(" + ",".join(parts) + ")"


def _encode_rooted(spec: CersSpec, face_id: str, parent: str | None, reflect: bool, cache) -> str:
    return _encode_from(spec, face_id, parent, reflect, cache)


def structure_key(spec: CersSpec, reflection: bool = True) -> str:
    """Canonical string of the face tree with segment lengths.

    Two specs get the same key iff they describe the same plane cers up to
    face relabelling and choice of root position (and mirror image when
    ``reflection`` is set).
    """
    cache = {f.id: _cyclic_tokens(f) for f in spec.faces}
    best = None
    for face in spec.faces:
        toks = cache[face.id]
        nbrs = toks[0::2] or [None]
        for first in nbrs:
            for reflect in (False, True) if reflection else (False,):
                enc = _top_encoding(spec, face.id, first, reflect, cache)
                if best is None or enc < best:
                    best = enc
    return best


def _top_encoding(spec, face_id, first, reflect, cache) -> str:
    toks = cache[face_id]
    if not toks:
        return f"({spec.face(face_id).length})"
    nbrs = toks[0::2]
    segs = toks[1::2]
    k = len(nbrs)
    r = nbrs.index(first)
    parts = []
    for t in range(k):
        i = (r - t) % k if reflect else (r + t) % k
        seg = segs[(i - 1) % k] if reflect else segs[i]
        parts.append(_encode_rooted(spec, nbrs[i], face_id, reflect, cache))
        parts.append(str(seg))
    return "[" + ",".join(parts) + "]"


def equivalence_key(spec: CersSpec, reflection: bool = True) -> str:
    return structure_key(canonical_form(spec), reflection)


def resonantly_equivalent(s1: CersSpec, s2: CersSpec, reflection: bool = True) -> bool:
    if len(s1) != len(s2):
        return False
    return equivalence_key(s1, reflection) == equivalence_key(s2, reflection)


# ---------------------------------------------------------------------------
# normality and benzenoid normalization


def is_normal(plane: PlaneCers) -> bool:
    dual = inner_dual(plane)
    for face, nbrs in dual.items():
        if len(nbrs) > 3:
            return False
        if len(nbrs) == 3:
            for a, f, b in triples_through(plane, face):
                if classify_triple(plane, a, f, b) is not TripleClass.REGULAR:
                    return False
    return True


def to_benzenoid(spec: CersSpec) -> CersSpec:
    """An all-hexagon spec resonantly equivalent to a normal cers."""
    plane = realize(spec)
    if not is_normal(plane):
        raise CersError("input is not a normal cers")
    parents = tree_parents(spec)
    faces = []
    for face in spec.faces:
        atts = face.sorted_attachments()
        if len(atts) <= 1:
            new_pos = [0] * len(atts)
        elif len(atts) == 2:
            regular = (atts[1].position - atts[0].position) % 2 == 0
            new_pos = [0, 2 if regular else 3]
        else:
            new_pos = [0, 2, 4]
        par = parents[face.id]
        start = 0 if par is None else [a.neighbor for a in atts].index(par)
        order = atts[start:] + atts[:start]
        where = {a.neighbor: p for a, p in zip(order, new_pos)}
        faces.append(
            FaceSpec(face.id, 6, tuple(Attachment(a.neighbor, where[a.neighbor]) for a in face.attachments))
        )
    return CersSpec(tuple(faces), spec.root)


def benzenoid_to_phenylene(spec: CersSpec) -> CersSpec:
    """Insert a para-attached square between every pair of adjacent hexagons."""
    if any(f.length != 6 for f in spec.faces):
        raise CersError("input has a non-hexagon face")
    report = validate_spec(spec)
    if not report.ok:
        raise CersError("invalid spec: " + "; ".join(map(str, report.violations)))
    parents = tree_parents(spec)
    taken = set(spec.face_ids)
    square_of: dict[tuple[str, str], str] = {}
    squares = []
    for face in spec.faces:
        par = parents[face.id]
        if par is None:
            continue
        sid = f"S{par}-{face.id}"
        while sid in taken:
            sid += "'"
        taken.add(sid)
        square_of[(par, face.id)] = square_of[(face.id, par)] = sid
        squares.append(FaceSpec(sid, 4, (Attachment(par, 0), Attachment(face.id, 2))))
    hexes = [
        FaceSpec(
            f.id,
            6,
            tuple(Attachment(square_of[(f.id, a.neighbor)], a.position) for a in f.attachments),
        )
        for f in spec.faces
    ]
    return CersSpec(tuple(hexes) + tuple(squares), spec.root)


# ---------------------------------------------------------------------------
# witness search


def find_nonbenzenoid_witness(
    max_faces: int = 4,
    max_face_length: int = 8,
    normal: bool | None = False,
) -> CersSpec | None:
    """First spec (in enumeration order) violating the benzenoid condition.

    ``normal=False`` searches only non-normal specs, ``True`` only normal
    ones, ``None`` everything.
    """
    for spec, _check in nonbenzenoid_witnesses(max_faces, max_face_length, normal):
        return spec
    return None


def nonbenzenoid_witnesses(
    max_faces: int, max_face_length: int, normal: bool | None = False
) -> Iterator[tuple[CersSpec, object]]:
    from .generate import enumerate_specs
    from .matching import enumerate_perfect_matchings
    from .resonance import benzenoid_condition, build_resonance_graph

    for spec in enumerate_specs(max_faces, max_face_length, dedupe="equivalence"):
        plane = realize(spec)
        if normal is not None and is_normal(plane) != normal:
            continue
        r = build_resonance_graph(plane, enumerate_perfect_matchings(plane))
        check = benzenoid_condition(r)
        if not check.holds:
            yield spec, check


def random_edits(spec: CersSpec, rng, count: int) -> tuple[CersSpec, list[SegmentEdit]]:
    """Apply up to ``count`` random valid segment edits."""
    edits = []
    cur = spec
    for _ in range(count):
        face = cur.faces[rng.randrange(len(cur.faces))]
        segs = segment_lengths(face)
        s = rng.randrange(len(segs))
        options = [d for d in (-4, -2, 2, 4) if segs[s] + d >= 1 and face.length + d >= 4]
        delta = rng.choice(options)
        edit = SegmentEdit(face.id, s, delta)
        cur = apply_transformation(cur, edit)
        edits.append(edit)
    return cur, edits


def iter_equivalence_classes(specs: Iterable[CersSpec]) -> dict[str, list[CersSpec]]:
    classes: dict[str, list[CersSpec]] = {}
    for s in specs:
        classes.setdefault(equivalence_key(s), []).append(s)
    return classes
