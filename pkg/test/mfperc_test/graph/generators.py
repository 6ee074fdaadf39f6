import pytest

from mfperc.annotations import InvalidParameterError
from mfperc.graph import complete_graph, hamming_graph, random_regular_graph, lps_ramanujan_graph, \
    lps_vertex_count, is_bipartite, is_connected, girth
from mfperc_test.util import brute_force_girth


def test_complete_graph():
    g = complete_graph(6)

    assert not g.is_implicit
    assert g.n == 6
    assert g.degree == 5
    assert g.num_edges == 15
    assert g.transitive


def test_complete_graph_too_small():
    with pytest.raises(InvalidParameterError):
        complete_graph(1)


def test_hamming_graph():
    g = hamming_graph(2, 3)

    assert g.n == 9
    assert g.degree == 4
    assert g.transitive
    # (1, 2) has the id 1 + 2*3 = 7
    assert list(g.neighbors(7)) == [1, 4, 6, 8]


def test_hamming_graph_3d():
    g = hamming_graph(3, 4)

    assert g.n == 64
    assert g.degree == 9
    assert girth(g) == 3


def test_hypercube_is_bipartite():
    g = hamming_graph(4, 2)

    assert g.degree == 4
    assert is_bipartite(g)
    assert girth(g) == 4


def test_random_regular_graph():
    g = random_regular_graph(100, 3, seed=7)

    assert g.n == 100
    assert g.degree == 3
    assert not g.transitive
    assert g.family_tag == "random_regular"


def test_random_regular_graph_is_reproducible():
    a = random_regular_graph(50, 4, seed=3)
    b = random_regular_graph(50, 4, seed=3)
    c = random_regular_graph(50, 4, seed=4)

    assert (a.edges == b.edges).all()
    assert a.edges.shape != c.edges.shape or (a.edges != c.edges).any()


def test_random_regular_graph_odd_stubs():
    with pytest.raises(InvalidParameterError):
        random_regular_graph(7, 3, seed=0)


def test_lps_graph():
    g = lps_ramanujan_graph(5, 13)

    assert g.n == 2184 == lps_vertex_count(5, 13)
    assert g.degree == 6
    assert is_bipartite(g)
    assert is_connected(g)


def test_lps_graph_non_bipartite():
    # 5 is a square mod 29
    g = lps_ramanujan_graph(5, 29)

    assert g.n == 29 * (29 * 29 - 1) // 2
    assert g.degree == 6
    assert not is_bipartite(g)


@pytest.mark.parametrize("p, q", [(5, 7), (3, 13), (5, 5), (13, 5)])
def test_lps_invalid_parameters(p, q):
    with pytest.raises(InvalidParameterError):
        lps_ramanujan_graph(p, q)


def test_random_regular_girth_oracle():
    g = random_regular_graph(30, 3, seed=11)

    assert girth(g) == brute_force_girth(g)
