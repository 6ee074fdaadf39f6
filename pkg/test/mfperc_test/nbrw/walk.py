import numpy as np
import pytest

from mfperc.annotations import CapacityError, InvalidParameterError
from mfperc.graph import complete_graph, hamming_graph, random_regular_graph, lps_ramanujan_graph, girth
from mfperc.nbrw import return_probabilities, averaged_return_profile, default_horizon, sample_nbrw, \
    sample_return_frequency, loop_identity_residual
from mfperc_test.util import petersen_graph, cycle_graph, nb_return_probability


@pytest.mark.parametrize("g, s, expected", [
    (complete_graph(4), 3, 1 / 2),
    (complete_graph(4), 4, 1 / 4),
    (petersen_graph(), 5, 1 / 4),
    (hamming_graph(2, 3), 3, 1 / 9),
    (complete_graph(27), 3, 1 / 25),
])
def test_known_values(g, s, expected):
    assert return_probabilities(g, 0, s)[s] == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("g", [complete_graph(4), petersen_graph(), hamming_graph(2, 3), cycle_graph(5)])
def test_matches_path_enumeration(g):
    profile = return_probabilities(g, 0, 7)

    assert profile[0] == 1.0
    for s in range(1, 8):
        assert profile[s] == pytest.approx(float(nb_return_probability(g, 0, s)), abs=1e-12)


@pytest.mark.parametrize("g", [petersen_graph(), hamming_graph(2, 3), hamming_graph(3, 3), lps_ramanujan_graph(5, 13)])
def test_no_return_below_girth(g):
    g_len = girth(g)
    profile = return_probabilities(g, 0, g_len)

    assert all(profile[s] == 0 for s in range(1, g_len))
    assert profile[g_len] > 0


def test_cycle_returns_once_around():
    profile = return_probabilities(cycle_graph(6), 0, 12)

    assert [s for s in range(1, 13) if profile[s] > 0] == [6, 12]
    assert profile[6] == pytest.approx(1.0)


def test_averaged_profile_transitive():
    g = petersen_graph()
    averaged = averaged_return_profile(g, 8)

    assert averaged.averaged
    assert averaged.values == pytest.approx(return_probabilities(g, 0, 8).values)


def test_averaged_profile_random_regular():
    g = random_regular_graph(40, 3, seed=1)
    averaged = averaged_return_profile(g, 10)
    direct = np.mean([return_probabilities(g, v, 10).values for v in range(g.n)], axis=0)

    assert averaged.values == pytest.approx(direct, abs=1e-12)


def test_scaled():
    profile = return_probabilities(complete_graph(4), 0, 4).scaled(2.0)

    assert profile[0] == 1.0
    assert profile[3] == pytest.approx(1.0)


def test_horizon_limits():
    with pytest.raises(InvalidParameterError):
        return_probabilities(petersen_graph(), 0, 0)
    with pytest.raises(CapacityError):
        return_probabilities(petersen_graph(), 0, 10 ** 6)


def test_default_horizon():
    # 2 * ceil(10^(1/3)) + 5
    assert default_horizon(petersen_graph()) == 11


def test_sample_nbrw():
    g = petersen_graph()
    path = sample_nbrw(g, 3, 50, np.random.default_rng(0))

    assert len(path) == 51 and path[0] == 3
    for a, b in zip(path, path[1:]):
        assert g.has_edge(a, b)
    for a, c in zip(path, path[2:]):
        assert a != c


def test_sample_return_frequency():
    g = petersen_graph()
    frequency, error = sample_return_frequency(g, 0, 5, 20000, np.random.default_rng(1))

    assert abs(frequency - 0.25) <= 4 * error
    assert error > 0


@pytest.mark.parametrize("g", [complete_graph(4), petersen_graph(), hamming_graph(2, 3), hamming_graph(3, 3)])
def test_loop_identity(g):
    for t in range(7):
        for t2 in range(7):
            assert loop_identity_residual(g, 0, t, t2) < 1e-10


@pytest.mark.slow
def test_loop_identity_lps():
    g = lps_ramanujan_graph(5, 13)
    for t in range(7):
        for t2 in range(7):
            assert loop_identity_residual(g, 0, t, t2) < 1e-10
