import pytest

from mfperc.annotations import StructureError, CapacityError, InvalidParameterError
from mfperc.graph import Graph, from_edges, complete_graph
from mfperc_test.util import petersen_graph


def test_from_edges():
    g = from_edges(4, [(1, 0), (1, 2), (3, 2), (0, 3)])

    assert g.n == 4
    assert g.degree == 2
    assert g.num_edges == 4
    assert list(g.neighbors(0)) == [1, 3]
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 2)
    assert g.family_tag == "custom"
    assert not g.transitive


def test_edges_are_sorted():
    g = petersen_graph()
    edges = [tuple(edge) for edge in g.edges]

    assert edges == sorted(edges)
    assert all(u < v for u, v in edges)
    for i, (u, v) in enumerate(edges):
        assert g.edge_id(u, v) == i
        assert g.edge_id(v, u) == i


def test_rejects_loops():
    with pytest.raises(StructureError):
        from_edges(3, [(0, 1), (1, 1)])


def test_rejects_parallel_edges():
    with pytest.raises(StructureError):
        from_edges(3, [(0, 1), (1, 0)])


def test_rejects_asymmetric_adjacency():
    with pytest.raises(StructureError):
        Graph(3, [[1], [0, 2], []])


def test_irregular_degree():
    g = from_edges(3, [(0, 1), (1, 2)])

    assert g.degree is None
    assert g.min_degree == 1
    assert list(g.degrees) == [1, 2, 1]


def test_unknown_family_tag():
    with pytest.raises(InvalidParameterError):
        Graph(2, [[1], [0]], family_tag="petersen")


def test_implicit_complete_graph():
    g = complete_graph(2000)

    assert g.is_implicit
    assert g.degree == 1999
    assert g.num_edges == 2000 * 1999 // 2
    assert g.transitive
    assert list(g.neighbors(5))[:6] == [0, 1, 2, 3, 4, 6]
    assert g.has_edge(7, 1999)
    with pytest.raises(CapacityError):
        _ = g.adjacency
