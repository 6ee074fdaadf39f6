import math

import pytest

from mfperc.annotations import StructureError, OutOfRegimeError, HorizonError
from mfperc.conditions import condition1_statistic, condition2_statistic, window_radius, condition_report
from mfperc.graph import complete_graph, hamming_graph, random_regular_graph
from mfperc.nbrw import averaged_return_profile, return_probabilities
from mfperc_test.util import cycle_graph, petersen_graph


def test_condition1_k27():
    # n^(1/3) = 3 and only R[3] = 1/25 contributes
    assert condition1_statistic(complete_graph(27)) == pytest.approx(0.36)


@pytest.mark.parametrize("n", [27, 64, 125])
def test_condition1_complete_graphs_below_one(n):
    assert condition1_statistic(complete_graph(n)) < 1


def test_condition1_matches_direct_sum():
    g = hamming_graph(2, 5)
    profile = return_probabilities(g, 0, 2)

    # floor(25^(1/3)) = 2
    assert condition1_statistic(g) == pytest.approx(25 ** (1 / 3) * (profile[1] + 2 * profile[2]))


def test_condition1_needs_degree_three():
    with pytest.raises(StructureError):
        condition1_statistic(cycle_graph(8))


def test_condition1_irregular():
    g = random_regular_graph(30, 3, seed=0)

    assert condition1_statistic(g) >= 0


def test_window_radius():
    assert window_radius(10 ** 9, 0.01) == 110


@pytest.mark.parametrize("n, eps", [(10 ** 9, 0.0), (10 ** 9, 0.5), (10 ** 9, -0.1), (1000, 0.1)])
def test_window_radius_out_of_regime(n, eps):
    with pytest.raises(OutOfRegimeError):
        window_radius(n, eps)


def test_window_radius_below_one():
    with pytest.raises(OutOfRegimeError) as e:
        window_radius(1000, 0.27)
    assert e.value.value < 1


def test_condition2_k27():
    g = complete_graph(27)
    eps, r = 0.1, 3
    profile = return_probabilities(g, 0, 2 * r)
    expected = r / eps * sum(((1 + eps) ** min(t, r) - 1) * profile[t] for t in range(1, 2 * r + 1))

    assert condition2_statistic(g, eps, r) == (r, pytest.approx(expected))
    assert profile[4] > 0 and profile[6] > 0


def test_condition2_is_linear_in_profile():
    g = petersen_graph()
    profile = averaged_return_profile(g, 8)
    _, s2 = condition2_statistic(g, 0.2, 4, profile)
    _, doubled = condition2_statistic(g, 0.2, 4, profile.scaled(2.0))

    assert doubled == pytest.approx(2 * s2)


def test_condition2_short_profile():
    g = petersen_graph()
    with pytest.raises(HorizonError) as e:
        condition2_statistic(g, 0.2, 4, averaged_return_profile(g, 5))
    assert e.value.required == 8


def test_condition_report():
    g = hamming_graph(2, 10)
    report = condition_report(g)

    assert report.n == 100
    assert report.d == 18
    assert report.eps is None and report.S2 is None
    assert report.S1 == pytest.approx(condition1_statistic(g))
    assert not report.averaged_over_vertices


def test_condition_report_out_of_regime_eps():
    report = condition_report(hamming_graph(2, 30), eps=900 ** -0.25)

    # n eps^3 exceeds e, but the radius is below 1
    assert report.r is None
    assert report.S2 is None
    assert math.isfinite(report.S1)
