import json
import math

import networkx as nx
import pytest

from cerscode import catalog
from cerscode.coding import code_graph
from cerscode.graphs import Graph, cycle_graph, path_graph
from cerscode.matching import edges_of, enumerate_perfect_matchings
from cerscode.model import realize
from cerscode.resonance import (
    MAX_MEDIAN_VERTICES,
    basic_shape_ok,
    benzenoid_condition,
    build_resonance_graph,
    degree_one_vertices,
    girth,
    graph_isomorphic,
    is_median_graph,
    two_connected_after_leaf_removal,
    verify_isometric_embedding,
)

from oracles import resonance_graph_oracle, to_nx


def resonance(spec):
    plane = realize(spec)
    return plane, build_resonance_graph(plane, enumerate_perfect_matchings(plane))


def c4_plus_pendant():
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def test_c6_resonance_is_k2():
    _, r = resonance(catalog.single_face(6))
    assert r.n == 2 and [(u, v) for u, v, _ in r.edges] == [(0, 1)]
    assert r.edges[0][2] == "F1"


def test_two_hexagons_path_on_three():
    _, r = resonance(catalog.naphthalene())
    assert graph_isomorphic(r.graph(), path_graph(3))[0]


def test_ladder3_cycle_plus_pendant():
    _, r = resonance(catalog.square_ladder(3))
    g = r.graph()
    assert (g.n, len(g.edges)) == (5, 5)
    assert graph_isomorphic(g, c4_plus_pendant())[0]


@pytest.mark.parametrize("name", ["anthracene", "phenanthrene", "square_ladder_4", "phenylene_kinky_3"])
def test_resonance_matches_oracle(name, fixed_catalog):
    plane, r = resonance(fixed_catalog[name])
    ref = resonance_graph_oracle(plane, [edges_of(m) for m in r.matchings])
    assert sorted((u, v) for u, v, _ in r.edges) == sorted(tuple(sorted(e)) for e in ref.edges)
    for u, v, f in r.edges:
        assert ref.edges[u, v]["face"] == f


def test_edge_labels_rotate_alternating_faces(corpus):
    for spec in corpus[:20]:
        plane, r = resonance(spec)
        for u, v, f in r.edges:
            cyc = plane.face_boundaries[f]
            for m in (r.matchings[u], r.matchings[v]):
                inside = [m >> e & 1 for e in cyc]
                assert all(inside[k] != inside[(k + 1) % len(cyc)] for k in range(len(cyc)))


def test_median_examples():
    assert is_median_graph(cycle_graph(4))
    assert not is_median_graph(cycle_graph(6))
    with pytest.raises(ValueError):
        is_median_graph(Graph.from_edges(3, [(0, 1)]))


def test_median_size_guard():
    big = path_graph(MAX_MEDIAN_VERTICES + 1)
    with pytest.raises(ValueError, match="limited"):
        is_median_graph(big)


def test_resonance_graphs_median_connected_bipartite(corpus, fixed_catalog):
    for spec in list(corpus) + list(fixed_catalog.values()):
        _, r = resonance(spec)
        assert basic_shape_ok(r)
        assert is_median_graph(r)


def test_isometric_embedding_examples():
    assert verify_isometric_embedding(path_graph(2), ["0", "1"])
    # path 01 - 00 - 10
    assert verify_isometric_embedding(path_graph(3), ["01", "00", "10"])
    assert not verify_isometric_embedding(path_graph(3), ["00", "01", "10"])
    codes = ["000", "010", "100", "001", "101"]
    _, r = resonance(catalog.square_ladder(3))
    iso = graph_isomorphic(code_graph(codes), r.graph())[1]
    assignment = {c: iso[i] for i, c in enumerate(codes)}
    assert verify_isometric_embedding(r, codes, assignment)


def test_isometric_embedding_errors():
    with pytest.raises(ValueError):
        verify_isometric_embedding(path_graph(3), ["00", "01"])
    with pytest.raises(ValueError):
        verify_isometric_embedding(path_graph(2), ["0", "0"])


def test_girth_and_leaves():
    g = c4_plus_pendant()
    assert girth(g) == 4
    assert degree_one_vertices(g) == {4}
    assert two_connected_after_leaf_removal(g)
    assert girth(path_graph(3)) == math.inf
    with pytest.raises(ValueError):
        two_connected_after_leaf_removal(path_graph(2))


def test_irregular_branch_residual_has_cut_vertex():
    _, r = resonance(catalog.irregular_branch())
    g = r.graph()
    assert len(degree_one_vertices(g)) == 1
    assert not two_connected_after_leaf_removal(g)
    assert not benzenoid_condition(g).holds


def test_ladder_and_phenanthrene_isomorphic():
    _, a = resonance(catalog.square_ladder(3))
    _, b = resonance(catalog.phenanthrene())
    ok, iso = graph_isomorphic(a, b)
    assert ok
    assert nx.is_isomorphic(to_nx(a.graph()), to_nx(b.graph()))


def test_iso_equivalence_relation_spot_check(fixed_catalog):
    gs = [resonance(s)[1].graph() for s in fixed_catalog.values()]
    rel = [[graph_isomorphic(a, b)[0] for b in gs] for a in gs]
    n = len(gs)
    for i in range(n):
        assert rel[i][i]
        for j in range(n):
            assert rel[i][j] == rel[j][i]
            for k in range(n):
                if rel[i][j] and rel[j][k]:
                    assert rel[i][k]


def test_exports():
    _, r = resonance(catalog.naphthalene())
    r = r.with_codes(["01", "10", "00"])
    data = json.loads(json.dumps(r.to_dict()))
    assert [v["label"] for v in data["vertices"]] == ["01", "10", "00"]
    dot = r.to_dot()
    assert dot.startswith("graph resonance {")
    assert '[label="F2"]' in dot
