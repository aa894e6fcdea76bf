"""Named cers used as fixtures and examples."""

from __future__ import annotations

from typing import Sequence

from .model import Attachment, CersSpec, FaceSpec


def single_face(length: int = 6, face_id: str = "F1") -> CersSpec:
    return CersSpec((FaceSpec(face_id, length),), face_id)


def chain(lengths: Sequence[int], child_positions: Sequence[int] = ()) -> CersSpec:
    """Unbranched chain ``F1 - F2 - ... - Fn`` rooted at ``F1``.

    ``child_positions[i]`` is where middle face ``F(i+2)`` carries its child;
    ``F1`` carries ``F2`` at position 0.
    """
    n = len(lengths)
    if n == 1:
        return single_face(lengths[0])
    if len(child_positions) != max(n - 2, 0):
        raise ValueError("need one child position per middle face")
    ids = [f"F{i + 1}" for i in range(n)]
    faces = [FaceSpec(ids[0], lengths[0], (Attachment(ids[1], 0),))]
    for i in range(1, n - 1):
        faces.append(
            FaceSpec(
                ids[i],
                lengths[i],
                (Attachment(ids[i - 1], 0), Attachment(ids[i + 1], child_positions[i - 1])),
            )
        )
    faces.append(FaceSpec(ids[-1], lengths[-1], (Attachment(ids[-2], 0),)))
    return CersSpec(tuple(faces), ids[0])


def star(center_length: int, positions: Sequence[int], leaf_lengths: Sequence[int] | int = 6) -> CersSpec:
    """A centre face ``C`` with one terminal face per attachment position.

    Rooted at the leaf on the smallest position, so the centre keeps that
    leaf at position 0 after a rotation of its positions.
    """
    if isinstance(leaf_lengths, int):
        leaf_lengths = [leaf_lengths] * len(positions)
    pos = sorted(positions)
    shift = pos[0]
    leaves = [f"L{i + 1}" for i in range(len(pos))]
    center = FaceSpec(
        "C",
        center_length,
        tuple(Attachment(leaf, (p - shift) % center_length) for leaf, p in zip(leaves, pos)),
    )
    faces = [FaceSpec(leaf, ln, (Attachment("C", 0),)) for leaf, ln in zip(leaves, leaf_lengths)]
    return CersSpec((faces[0], center, *faces[1:]), leaves[0])


def hexagon_chain(n: int) -> CersSpec:
    """Linear acene: every middle hexagon para-attached."""
    return chain([6] * n, [3] * max(n - 2, 0))


def square_ladder(n: int) -> CersSpec:
    """``n`` squares glued in a para chain (a 2 x (n+1) grid)."""
    return chain([4] * n, [2] * max(n - 2, 0))


def naphthalene() -> CersSpec:
    return hexagon_chain(2)


def anthracene() -> CersSpec:
    return hexagon_chain(3)


def phenanthrene() -> CersSpec:
    return chain([6, 6, 6], [2])


def triphenylene_like() -> CersSpec:
    """Branched hexagon with three terminal hexagons."""
    return star(6, [0, 2, 4])


def irregular_branch() -> CersSpec:
    """Octagon with three terminal squares at 0, 2, 5: one irregular pair."""
    return star(8, [0, 2, 5], 4)


def fixed_catalog() -> dict[str, CersSpec]:
    from .equivalence import benzenoid_to_phenylene

    cat = {
        "C6": single_face(6),
        "naphthalene": naphthalene(),
        "anthracene": anthracene(),
        "phenanthrene": phenanthrene(),
    }
    for n in range(1, 7):
        cat[f"square_ladder_{n}"] = square_ladder(n)
    cat["biphenylene"] = benzenoid_to_phenylene(naphthalene())
    cat["phenylene_linear_3"] = benzenoid_to_phenylene(anthracene())
    cat["phenylene_kinky_3"] = benzenoid_to_phenylene(phenanthrene())
    return cat
