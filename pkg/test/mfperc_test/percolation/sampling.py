import numpy as np
import pytest

from mfperc.annotations import InvalidParameterError, CapacityError
from mfperc.config import DEFAULTS
from mfperc.graph import complete_graph, hamming_graph
from mfperc.percolation import sample_percolation
from mfperc_test.util import petersen_graph


def test_extreme_probabilities():
    g = petersen_graph()
    rng = np.random.default_rng(0)

    assert sample_percolation(g, 0.0, rng).num_open == 0
    full = sample_percolation(g, 1.0, rng)
    assert full.num_open == 15
    assert (full.open_edges == g.edges).all()


def test_open_fraction():
    g = hamming_graph(2, 30)
    mask = sample_percolation(g, 0.3, np.random.default_rng(1), seed=1)

    assert mask.seed == 1
    assert mask.bits.sum() == mask.num_open
    assert abs(mask.num_open / g.num_edges - 0.3) < 0.02


def test_same_seed_same_mask():
    g = hamming_graph(2, 10)
    a = sample_percolation(g, 0.5, np.random.default_rng(9))
    b = sample_percolation(g, 0.5, np.random.default_rng(9))

    assert (a.bits == b.bits).all()


def test_invalid_probability():
    with pytest.raises(InvalidParameterError):
        sample_percolation(petersen_graph(), 1.2, np.random.default_rng(0))


def test_implicit_all_pairs():
    g = complete_graph(1500)
    mask = sample_percolation(g, 1 / 1499, np.random.default_rng(2))

    assert g.is_implicit
    assert mask.bits is None
    assert (mask.open_edges[:, 0] < mask.open_edges[:, 1]).all()


def test_implicit_binomial_count(monkeypatch):
    monkeypatch.setitem(DEFAULTS, "max_open_edges", 100000)
    g = complete_graph(2000)
    mask = sample_percolation(g, 0.01, np.random.default_rng(3))
    keys = mask.open_edges[:, 0] * g.n + mask.open_edges[:, 1]

    assert np.unique(keys).size == mask.num_open
    assert (mask.open_edges[:, 0] < mask.open_edges[:, 1]).all()
    assert abs(mask.num_open - 0.01 * g.num_edges) < 5 * np.sqrt(0.01 * g.num_edges)


def test_implicit_capacity(monkeypatch):
    monkeypatch.setitem(DEFAULTS, "max_open_edges", 100000)
    with pytest.raises(CapacityError):
        sample_percolation(complete_graph(2000), 0.5, np.random.default_rng(4))
