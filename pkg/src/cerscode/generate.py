"""Random and exhaustive generation of valid cers specs."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .model import Attachment, CersSpec, FaceSpec, validate_spec


def _free_positions(length: int, used: list[int]) -> list[int]:
    return [
        p
        for p in range(length)
        if all((p - q) % length not in (0, 1, length - 1) for q in used)
    ]


def random_spec(
    rng: random.Random, max_faces: int = 8, max_face_length: int = 10, min_faces: int = 1
) -> CersSpec:
    """Random tree of faces, random even lengths, random free positions.

    Draws that leave no free position for the next face are rejected and
    redrawn, so the result always validates.
    """
    if max_face_length < 4 or max_faces < 1 or min_faces > max_faces:
        raise ValueError("bounds must allow at least one face of length 4")
    lengths = list(range(4, max_face_length + 1, 2))
    while True:
        n = rng.randint(min_faces, max_faces)
        faces: list[tuple[str, int, list[Attachment]]] = [("F1", rng.choice(lengths), [])]
        ok = True
        for t in range(1, n):
            slots = [
                (i, p)
                for i, (_, ln, atts) in enumerate(faces)
                for p in _free_positions(ln, [a.position for a in atts])
            ]
            if not slots:
                ok = False
                break
            i, p = rng.choice(slots)
            fid = f"F{t + 1}"
            faces[i][2].append(Attachment(fid, p))
            faces.append((fid, rng.choice(lengths), [Attachment(faces[i][0], 0)]))
        if not ok:
            continue
        spec = CersSpec(tuple(FaceSpec(f, ln, tuple(atts)) for f, ln, atts in faces), "F1")
        if validate_spec(spec).ok:
            return spec


def random_corpus(seed: int, count: int, max_faces: int = 8, max_face_length: int = 10) -> list[CersSpec]:
    rng = random.Random(seed)
    return [random_spec(rng, max_faces, max_face_length) for _ in range(count)]


def _child_position_sets(length: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Non-adjacent subsets of ``2..length-2`` with at most ``budget`` elements."""
    cand = list(range(2, length - 1))

    def rec(start: int, chosen: tuple[int, ...]):
        yield chosen
        if len(chosen) == budget:
            return
        for idx in range(start, len(cand)):
            p = cand[idx]
            if chosen and p - chosen[-1] < 2:
                continue
            yield from rec(idx + 1, chosen + (p,))

    yield from rec(0, ())


def enumerate_specs(
    max_faces: int, max_face_length: int, dedupe: str | None = "graph"
) -> Iterator[CersSpec]:
    """Every cers with at most ``max_faces`` faces of length at most ``max_face_length``.

    Specs are rooted at a terminal face and generated breadth-first.
    ``dedupe="graph"`` drops repeats of the same plane cers,
    ``"equivalence"`` keeps one representative per resonant-equivalence
    class, ``None`` keeps everything.
    """
    from .equivalence import equivalence_key, structure_key

    lengths = list(range(4, max_face_length + 1, 2))
    seen: set[str] = set()

    def grow(faces: dict, pending: list[str], count: int) -> Iterator[dict]:
        if not pending:
            yield faces
            return
        fid, rest = pending[0], pending[1:]
        length, atts = faces[fid]
        for positions in _child_position_sets(length, max_faces - count):
            if not positions:
                yield from grow(faces, rest, count)
                continue
            new_ids = [f"F{count + i + 1}" for i in range(len(positions))]
            for child_lengths in itertools.product(lengths, repeat=len(positions)):
                nf = dict(faces)
                nf[fid] = (length, atts + [Attachment(c, p) for c, p in zip(new_ids, positions)])
                for c, ln in zip(new_ids, child_lengths):
                    nf[c] = (ln, [Attachment(fid, 0)])
                yield from grow(nf, rest + new_ids, count + len(positions))

    for root_len in lengths:
        candidates = [{"F1": (root_len, [])}]
        if max_faces >= 2:
            for ln in lengths:
                faces = {"F1": (root_len, [Attachment("F2", 0)]), "F2": (ln, [Attachment("F1", 0)])}
                candidates.append(faces)
        for start in candidates:
            pending = ["F2"] if "F2" in start else []
            for faces in grow(start, pending, len(start)):
                spec = CersSpec(
                    tuple(FaceSpec(f, ln, tuple(atts)) for f, (ln, atts) in faces.items()), "F1"
                )
                if dedupe is not None:
                    key = equivalence_key(spec) if dedupe == "equivalence" else structure_key(spec)
                    if key in seen:
                        continue
                    seen.add(key)
                yield spec

