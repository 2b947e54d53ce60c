import math
from itertools import combinations

import pytest
from hypothesis import given, settings

from tollkit.graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    VertexSet,
    diameter,
    diametral_pair,
    distances,
    eccentric_vertices,
    eccentricity,
    family,
    new_graph,
)

from .strategies import any_graphs


def floyd_warshall(g: Graph) -> list[list[float]]:
    d = [[0 if i == j else (1 if g.has_edge(i, j) else math.inf) for j in range(g.n)]
         for i in range(g.n)]
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def test_new_graph_path():
    p4 = new_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4 == family("path", 4)
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]


def test_new_graph_symmetrizes_and_dedups():
    g = new_graph(3, [(0, 1), (1, 0), (0, 1), (2, 1)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.edge_count() == 2


def test_paw_pendant_factor(paw):
    assert paw == new_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


@pytest.mark.parametrize(
    "n, edges",
    [(3, [(0, 1), (0, 0)]), (3, [(0, 3)]), (3, [(-1, 0)]), (0, [])],
)
def test_new_graph_rejects(n, edges):
    with pytest.raises(GraphError):
        new_graph(n, edges)


def test_graph_is_immutable():
    g = family("path", 3)
    with pytest.raises(AttributeError):
        g.n = 5


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])


def test_neighborhoods(paw):
    p4 = family("path", 4)
    assert p4.neighbors(1) == p4.vertex_set([0, 2])
    assert paw.closed_neighborhood(2).is_full()
    assert family("complete", 4).closed_neighborhood(0).is_full()
    assert 1 not in p4.neighbors(1)
    with pytest.raises(GraphError):
        p4.neighbors(4)


def test_path_distances():
    p4 = family("path", 4)
    assert diameter(p4) == 3
    assert eccentricity(p4, 1) == 2
    assert eccentric_vertices(p4, 1) == p4.vertex_set([3])


def test_c5_eccentric_sets():
    c5 = family("cycle", 5)
    fw = floyd_warshall(c5)
    assert diameter(c5) == 2
    for v in range(5):
        expected = {x for x in range(5) if fw[v][x] == max(fw[v])}
        assert set(eccentric_vertices(c5, v)) == expected
        assert len(expected) == 2


def test_paw_pendant_diameter(paw):
    fw = floyd_warshall(paw)
    assert diameter(paw) == max(max(r) for r in fw) == 2
    assert fw[0][3] == 2
    assert diametral_pair(paw) == (0, 3)


def test_disconnected_rejected_by_distance_family():
    g = new_graph(4, [(0, 1), (2, 3)])
    assert not g.is_connected()
    assert distances(g)[0, 2] == math.inf
    for call in (lambda: diameter(g), lambda: eccentricity(g, 0), lambda: eccentric_vertices(g, 0)):
        with pytest.raises(DisconnectedGraphError):
            call()


def test_simplicial_examples(paw):
    p4 = family("path", 4)
    assert p4.is_simplicial(0)
    assert not p4.is_simplicial(1)
    assert not paw.is_simplicial(2)
    assert paw.is_simplicial(3)


@pytest.mark.parametrize("kind, n", [("cycle", 2), ("path", 1), ("complete", 1), ("paw_pendant", 5), ("star", 4)])
def test_family_rejects(kind, n):
    with pytest.raises(GraphError):
        family(kind, n)


@pytest.mark.parametrize("n", range(3, 13))
def test_family_diameters(n):
    assert diameter(family("path", n)) == n - 1
    assert diameter(family("complete", n)) == 1
    assert diameter(family("cycle", n)) == n // 2


@given(any_graphs())
def test_symmetric_and_irreflexive(g):
    for u in range(g.n):
        assert not g.has_edge(u, u)
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)


@given(any_graphs(max_n=8))
@settings(max_examples=150)
def test_distances_match_floyd_warshall(g):
    d = distances(g)
    fw = floyd_warshall(g)
    for u in range(g.n):
        assert d.row(u) == tuple(fw[u])
        assert d[u, u] == 0
        for v in range(g.n):
            assert d[u, v] == d[v, u]
            for w in range(g.n):
                if d[u, v] < math.inf and d[v, w] < math.inf:
                    assert d[u, w] <= d[u, v] + d[v, w]


@given(any_graphs(max_n=9))
def test_simplicial_matches_pair_check(g):
    for v in range(g.n):
        nbrs = list(g.neighbors(v))
        brute = all(g.has_edge(a, b) for a, b in combinations(nbrs, 2))
        assert g.is_simplicial(v) == brute


def test_vertex_set_algebra():
    a = VertexSet.of(6, [0, 2, 4])
    b = VertexSet.of(6, [2, 3])
    assert set(a | b) == {0, 2, 3, 4}
    assert set(a & b) == {2}
    assert set(a - b) == {0, 4}
    assert set(a.complement()) == {1, 3, 5}
    assert len(a) == 3 and 4 in a and 5 not in a
    assert (a & b) <= a and not a <= b
    assert repr(a) == "{0,2,4}"
    with pytest.raises(GraphError):
        a | VertexSet.of(5, [0])
    with pytest.raises(GraphError):
        VertexSet.of(3, [3])


def test_large_graph_supported():
    g = family("path", 1024)
    assert g.n == 1024 and g.is_connected()
    assert g.neighbors(1023) == g.vertex_set([1022])
