import math

import pytest

from mfperc.annotations import StructureError
from mfperc.graph import girth, is_bipartite, is_connected, spectral_expansion, diagnose, complete_graph, \
    hamming_graph, from_edges
from mfperc_test.util import petersen_graph, cycle_graph, k33_graph, brute_force_girth


@pytest.mark.parametrize("g, expected", [
    (complete_graph(4), 3),
    (petersen_graph(), 5),
    (cycle_graph(7), 7),
    (k33_graph(), 4),
    (hamming_graph(2, 3), 3),
])
def test_girth(g, expected):
    assert girth(g) == expected
    assert brute_force_girth(g) == expected


def test_girth_of_forest():
    g = from_edges(4, [(0, 1), (1, 2), (1, 3)])

    assert girth(g) == math.inf


def test_girth_implicit():
    assert girth(complete_graph(3000)) == 3


def test_bipartite():
    assert is_bipartite(cycle_graph(6))
    assert is_bipartite(k33_graph())
    assert not is_bipartite(cycle_graph(5))
    assert not is_bipartite(petersen_graph())


def test_connected():
    assert is_connected(petersen_graph())
    assert not is_connected(from_edges(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("g, expected", [
    (complete_graph(4), 1 / 3),
    (petersen_graph(), 2 / 3),
    (hamming_graph(2, 3), 1 / 2),
    (cycle_graph(6), 1 / 2),
    (k33_graph(), 0.0),
])
def test_spectral_expansion(g, expected):
    assert spectral_expansion(g) == pytest.approx(expected, abs=1e-6)


def test_spectral_expansion_k2():
    assert spectral_expansion(complete_graph(2)) == 0.0


def test_spectral_expansion_implicit():
    assert spectral_expansion(complete_graph(5000)) == pytest.approx(1 / 4999)


def test_spectral_expansion_disconnected():
    with pytest.raises(StructureError):
        spectral_expansion(from_edges(4, [(0, 1), (2, 3)]))


def test_diagnose():
    report = diagnose(petersen_graph())

    assert report.girth == 5
    assert report.is_regular
    assert report.degree == 3
    assert report.lambda_star == pytest.approx(2 / 3, abs=1e-6)
    assert not report.is_bipartite


def test_diagnose_without_spectral():
    assert diagnose(cycle_graph(4), spectral=False).lambda_star is None
