import numpy as np

from mfperc.graph import hamming_graph, complete_graph
from mfperc.percolation import EdgeMask, sample_percolation, component_stats, cluster_of
from mfperc_test.util import petersen_graph


def _mask(g, bits):
    bits = np.asarray(bits, dtype=bool)
    return EdgeMask(p=0.5, open_edges=g.edges[bits], bits=bits)


def test_component_stats():
    g = petersen_graph()
    bits = np.zeros(g.num_edges, dtype=bool)
    for u, v in [(0, 1), (1, 2), (5, 7)]:
        bits[g.edge_id(u, v)] = True
    stats = component_stats(g, _mask(g, bits))

    assert stats.c1_size == 3
    assert list(stats.c1_vertices) == [0, 1, 2]
    assert list(stats.sizes) == [3, 2, 1, 1, 1, 1, 1]
    assert stats.count == 7


def test_sizes_sum_to_n():
    g = hamming_graph(2, 20)
    rng = np.random.default_rng(0)
    for p in (0.02, 0.05, 0.1):
        stats = component_stats(g, sample_percolation(g, p, rng))
        assert stats.sizes.sum() == g.n
        assert 1 <= stats.c1_size <= g.n


def test_largest_component_monotone_in_open_edges():
    g = hamming_graph(2, 20)
    u = np.random.default_rng(1).random(g.num_edges)
    sizes = [component_stats(g, _mask(g, u < p)).c1_size for p in np.linspace(0, 0.2, 11)]

    assert sizes == sorted(sizes)
    assert sizes[0] == 1


def test_cluster_of():
    g = petersen_graph()
    bits = np.zeros(g.num_edges, dtype=bool)
    bits[g.edge_id(3, 4)] = True
    bits[g.edge_id(4, 9)] = True
    mask = _mask(g, bits)

    assert list(cluster_of(g, mask, 9)) == [3, 4, 9]
    assert list(cluster_of(g, mask, 0)) == [0]


def test_implicit_components():
    g = complete_graph(1500)
    stats = component_stats(g, sample_percolation(g, 2 / 1499, np.random.default_rng(2)))

    # Supercritical Erdos-Renyi graph: the giant component holds about 80% of the vertices
    assert 0.6 * g.n < stats.c1_size < 0.95 * g.n
