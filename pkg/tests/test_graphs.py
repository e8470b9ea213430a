import pytest

from srlink.graphs import (
    Graph,
    canonical_B,
    circulant,
    complete_graph,
    edge_ideal,
    independence_complex,
    max_support_bound,
    nf_ideal,
    path_graph,
    vertex_orbits,
)


def test_circulant_edges():
    g = circulant(16, [1, 4, 8])
    assert len(g.edges) == 40
    assert g.neighbours(1) == [2, 5, 9, 13, 16]
    assert all(g.degree(v) == 5 for v in range(1, 17))
    assert g.is_automorphism(g.rotation())


def test_circulant_errors():
    with pytest.raises(ValueError):
        circulant(2, [1])
    with pytest.raises(ValueError):
        circulant(6, [4])


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 4)])


def test_edge_ideal_and_independence_complex():
    g = path_graph(3)
    assert edge_ideal(g).strings() == ["x1*x2", "x2*x3"]
    assert sorted(independence_complex(g).facets) == [(1, 3), (2,)]
    assert edge_ideal(complete_graph(3)).height() == 2


def test_nf_and_canonical_B():
    g = circulant(16, [1, 4, 8])
    assert nf_ideal(g, [1]).strings() == ["x2", "x5", "x9", "x13", "x16"]
    assert nf_ideal(g, [2, 16]).strings() == ["x1"]
    B = canonical_B(g, [1])
    assert B == edge_ideal(g).add_variables([2, 5, 9, 13, 16])
    assert all(B.contains_set([v]) for v in (2, 5, 9, 13, 16))
    assert not B.contains_set([1])


def test_max_support_bound():
    assert max_support_bound(circulant(16, [1, 4, 8])) == 5


def test_orbits():
    g = circulant(6, [1])
    assert vertex_orbits(6, [g.rotation()]) == [[1, 2, 3, 4, 5, 6]]
    assert vertex_orbits(4, [[2, 1, 3, 4]]) == [[1, 2], [3], [4]]


def test_dict_round_trip():
    g = circulant(16, [1, 4, 8])
    assert Graph.from_dict(g.to_dict()) == g
    h = path_graph(4)
    assert Graph.from_dict(h.to_dict()) == h
    with pytest.raises(ValueError):
        Graph.from_dict({"n": 3})
