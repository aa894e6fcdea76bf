import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cerscode import _purepy, kernels
from cerscode.graphs import (
    Graph,
    articulation_points,
    cycle_graph,
    find_isomorphism,
    girth,
    is_bipartite,
    is_path,
    path_graph,
)

from oracles import median_graph_oracle, to_nx


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@st.composite
def connected_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    edges = [(v, draw(st.integers(0, v - 1))) for v in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n))
    edges += [(u, v) for u, v in extra if u != v]
    return Graph.from_edges(n, edges)


def relabel(g: Graph, perm) -> Graph:
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def test_distances_path():
    d = path_graph(4).distances
    assert d.tolist() == [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_distances_match_networkx(g):
    ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    d = g.distances
    for u in range(g.n):
        for v in range(g.n):
            assert d[u, v] == ref[u].get(v, -1)


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_girth_matches_networkx(g):
    assert girth(g) == nx.girth(to_nx(g))


def test_girth_forest_is_infinite():
    assert girth(path_graph(5)) == math.inf
    assert girth(cycle_graph(4)) == 4


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_articulation_points_match_networkx(g):
    assert articulation_points(g) == set(nx.articulation_points(to_nx(g)))


@settings(max_examples=50, deadline=None)
@given(graphs())
def test_bipartite_matches_networkx(g):
    assert is_bipartite(g) == nx.is_bipartite(to_nx(g))


def test_is_path():
    assert is_path(path_graph(4))
    assert not is_path(cycle_graph(4))
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert not is_path(star)


# -- isomorphism ----------------------------------------------------------------


def test_iso_self_identity_witness():
    g = cycle_graph(6)
    iso = find_isomorphism(g, g)
    assert iso is not None
    assert all(g.has_edge(iso[u], iso[v]) for u, v in g.edges)


def test_iso_path_vs_star():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert find_isomorphism(path_graph(4), star) is None


@settings(max_examples=80, deadline=None)
@given(graphs(10), st.randoms(use_true_random=False))
def test_iso_relabelled_copy(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    iso = find_isomorphism(g, h)
    assert iso is not None
    assert sorted(iso.values()) == list(range(g.n))
    assert all(h.has_edge(iso[u], iso[v]) for u, v in g.edges)


@settings(max_examples=120, deadline=None)
@given(graphs(7), graphs(7))
def test_iso_decision_matches_networkx(g, h):
    assert (find_isomorphism(g, h) is not None) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_iso_hypercube():
    q = nx.hypercube_graph(5)
    idx = {v: i for i, v in enumerate(sorted(q.nodes))}
    g = Graph.from_edges(32, [(idx[a], idx[b]) for a, b in q.edges])
    perm = list(np.random.default_rng(3).permutation(32))
    assert find_isomorphism(g, relabel(g, perm)) is not None


# -- kernels ----------------------------------------------------------------------


def median(g):
    return kernels.median_violation(np.ascontiguousarray(g.distances))


def test_median_c4_true_c6_false():
    assert median(cycle_graph(4)) is None
    u, v, w, count = median(cycle_graph(6))
    assert count == 0


@settings(max_examples=60, deadline=None)
@given(connected_graphs(9))
def test_median_kernel_matches_oracle(g):
    assert (median(g) is None) == median_graph_oracle(to_nx(g))


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled extension not built")
@settings(max_examples=60, deadline=None)
@given(connected_graphs(14))
def test_compiled_and_python_kernels_agree(g):
    from cerscode import _kernels

    indptr, indices = g.csr
    dc = _kernels.all_pairs_distances(g.n, indptr, indices)
    dp = _purepy.all_pairs_distances(g.n, indptr, indices)
    assert (dc == dp).all()
    assert _kernels.median_violation(dc) == _purepy.median_violation(dp)
