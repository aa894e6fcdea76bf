import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cerscode import catalog
from cerscode.coding import (
    FaceOrdering,
    binary_codes,
    code_graph,
    coded_matchings,
    well_order_faces,
)
from cerscode.generate import random_spec
from cerscode.graphs import Graph, path_graph
from cerscode.matching import enumerate_perfect_matchings
from cerscode.model import CersError, realize
from cerscode.resonance import build_resonance_graph, graph_isomorphic, verify_isometric_embedding

from oracles import hamming


def codes_of(spec, strategy="bfs", root=None):
    return binary_codes(realize(spec), well_order_faces(spec, root, strategy)).codes


# -- well_order_faces -------------------------------------------------------------


def test_path_tree_order():
    spec = catalog.anthracene()
    for strategy in ("bfs", "dfs"):
        assert well_order_faces(spec, "F1", strategy).faces == ("F1", "F2", "F3")


def test_star_bfs_order():
    from cerscode.model import Attachment, CersSpec, FaceSpec

    spec = CersSpec(
        (
            FaceSpec("A", 6, (Attachment("C", 0),)),
            FaceSpec("C", 6, (Attachment("A", 0), Attachment("D", 2), Attachment("B", 4))),
            FaceSpec("B", 6, (Attachment("C", 0),)),
            FaceSpec("D", 6, (Attachment("C", 0),)),
        ),
        "A",
    )
    assert well_order_faces(spec, "A", "bfs").faces == ("A", "C", "B", "D")


def test_non_terminal_root_rejected():
    with pytest.raises(CersError):
        well_order_faces(catalog.anthracene(), "F2")


def test_dfs_and_bfs_differ_on_deeper_trees():
    # F1 - C, C carries two chains of length 2
    from cerscode.model import Attachment, CersSpec, FaceSpec

    spec = CersSpec(
        (
            FaceSpec("F1", 6, (Attachment("F2", 0),)),
            FaceSpec("F2", 6, (Attachment("F1", 0), Attachment("F3", 2), Attachment("F4", 4))),
            FaceSpec("F3", 6, (Attachment("F2", 0), Attachment("F5", 3))),
            FaceSpec("F4", 6, (Attachment("F2", 0),)),
            FaceSpec("F5", 6, (Attachment("F3", 0),)),
        ),
        "F1",
    )
    assert well_order_faces(spec, strategy="bfs").faces == ("F1", "F2", "F3", "F4", "F5")
    assert well_order_faces(spec, strategy="dfs").faces == ("F1", "F2", "F3", "F5", "F4")


# -- binary_codes ------------------------------------------------------------------


@pytest.mark.parametrize(
    "spec",
    [catalog.naphthalene(), catalog.square_ladder(2), catalog.chain([4, 10], []), catalog.chain([8, 6], [])],
)
def test_two_face_base_case(spec):
    assert codes_of(spec) == ("00", "01", "10")


def test_anthracene_codes():
    assert set(codes_of(catalog.anthracene())) == {"000", "010", "100", "011"}


def test_ladder3_codes():
    assert set(codes_of(catalog.square_ladder(3))) == {"000", "010", "100", "001", "101"}


def test_single_face_codes():
    assert codes_of(catalog.single_face(6)) == ("0", "1")


def test_inconsistent_ordering_rejected():
    spec = catalog.anthracene()
    bad = FaceOrdering(("F1", "F3", "F2"), "bfs", "F1")
    with pytest.raises(CersError):
        binary_codes(realize(spec), bad)


# -- code_graph --------------------------------------------------------------------


def test_code_graph_base():
    g = code_graph(["00", "01", "10"])
    assert set(g.edges) == {(0, 1), (0, 2)}


def test_code_graph_anthracene_is_path():
    codes = ["100", "000", "010", "011"]
    g = code_graph(codes)
    assert set(g.edges) == {(0, 1), (1, 2), (2, 3)}


def test_code_graph_ladder3():
    codes = ["000", "100", "101", "001", "010"]
    g = code_graph(codes)
    assert set(g.edges) == {(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)}


# -- coded_matchings ---------------------------------------------------------------


def test_base_case_matchings():
    spec = catalog.naphthalene()
    plane = realize(spec)
    cm = coded_matchings(plane, well_order_faces(spec))
    d = cm.as_dict()
    e = plane.shared_edge("F1", "F2")
    assert d["00"] >> e & 1
    assert d["01"] == d["00"] ^ plane.face_masks["F2"]
    assert sorted(d.values()) == sorted(enumerate_perfect_matchings(plane))


def test_anthracene_zero_code():
    spec = catalog.anthracene()
    plane = realize(spec)
    d = coded_matchings(plane, well_order_faces(spec)).as_dict()
    zero = d["000"]
    assert zero >> plane.shared_edge("F1", "F2") & 1
    # para middle face: the second shared edge is not in the all-zero matching
    assert not zero >> plane.shared_edge("F2", "F3") & 1
    assert d["010"] == zero ^ plane.face_masks["F2"]
    assert d["100"] == zero ^ plane.face_masks["F1"]


def test_zero_code_shared_edges_follow_regularity(corpus):
    from cerscode.coding import _steps

    for spec in corpus[:30]:
        if len(spec) < 2:
            continue
        plane = realize(spec)
        order = well_order_faces(spec)
        zero = coded_matchings(plane, order).as_dict()["0" * len(spec)]
        assert zero >> plane.shared_edge(*order.faces[:2]) & 1
        for _k, _j, fk, fj, regular in _steps(plane, order):
            assert bool(zero >> plane.shared_edge(fj, fk) & 1) == regular


def check_instance(spec, strategy="bfs"):
    plane = realize(spec)
    ms = enumerate_perfect_matchings(plane)
    r = build_resonance_graph(plane, ms)
    order = well_order_faces(spec, strategy=strategy)
    cm = coded_matchings(plane, order)
    assert cm.codes == binary_codes(plane, order).codes
    assert len(set(cm.codes)) == len(cm.codes) == len(ms)
    assert "0" * len(spec) in cm.codes
    assert sorted(cm.matchings) == sorted(ms)
    idx = {m: i for i, m in enumerate(ms)}
    assignment = {c: idx[m] for c, m in zip(cm.codes, cm.matchings)}
    # the explicit map is an isomorphism witness: Hamming 1 <-> one rotation
    g = r.graph()
    for i, a in enumerate(cm.codes):
        for b in cm.codes[i + 1 :]:
            assert (hamming(a, b) == 1) == g.has_edge(assignment[a], assignment[b])
    assert verify_isometric_embedding(g, cm.codes, assignment)
    assert graph_isomorphic(code_graph(cm.codes), g)[0]
    return cm


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["bfs", "dfs"]))
def test_coding_against_oracle(seed, strategy):
    check_instance(random_spec(random.Random(seed), 8, 10), strategy)


def test_bfs_dfs_code_graphs_isomorphic(corpus):
    for spec in corpus[:30]:
        plane = realize(spec)
        a = binary_codes(plane, well_order_faces(spec, strategy="bfs"))
        b = binary_codes(plane, well_order_faces(spec, strategy="dfs"))
        assert graph_isomorphic(code_graph(a), code_graph(b))[0]


def test_every_terminal_root_works():
    spec = catalog.irregular_branch()
    for root in spec.terminal_faces():
        plane = realize(spec)
        cs = binary_codes(plane, well_order_faces(spec, root))
        assert len(cs) == len(enumerate_perfect_matchings(plane))


def test_two_face_resonance_is_three_vertex_path():
    assert graph_isomorphic(code_graph(codes_of(catalog.naphthalene())), path_graph(3))[0]
    assert isinstance(code_graph(["0", "1"]), Graph)


def test_single_face_zero_contains_first_edge():
    spec = catalog.single_face(8)
    d = coded_matchings(realize(spec), well_order_faces(spec)).as_dict()
    assert d["0"] & 1 and not d["1"] & 1
    assert d["0"] ^ d["1"] == (1 << 8) - 1
