import numpy as np
import pytest

from mfperc.annotations import InvalidParameterError
from mfperc.tree import lemma7_checks, lemma8_checks, conditional_window_moment, window_sum_moment

EPS_GRID = [0.05, 0.1, 0.2, 0.4]
R_GRID = [10, 20, 50, 100, 200]


@pytest.mark.parametrize("eps", EPS_GRID)
@pytest.mark.parametrize("r", R_GRID)
def test_supercritical_survival_bounds(eps, r):
    report = lemma7_checks(3, eps, r)

    assert report.holds
    assert report.p == pytest.approx((1 + eps) / 2)
    assert report.lower == pytest.approx(eps / 2)


@pytest.mark.parametrize("eps", EPS_GRID)
@pytest.mark.parametrize("r", R_GRID)
def test_subcritical_survival_bounds(eps, r):
    report = lemma8_checks(3, eps, r)

    assert report.holds
    assert report.upper == pytest.approx(12 / r)


def test_moment_ratios_positive():
    report = lemma7_checks(4, 0.1, 40)

    assert report.second_moment_ratio > 0
    assert report.window_moment_ratio > 0
    assert report.mc_window_moment_ratio is None


def test_conditional_window_moment():
    rng = np.random.default_rng(3)
    d, p, r = 3, 0.5, 4
    estimate, error = conditional_window_moment(d, p, r, 20000, rng)

    assert abs(estimate - window_sum_moment(d, p, r)) <= 4 * error


def test_monte_carlo_ratio():
    report = lemma8_checks(3, 0.2, 10, mc_trials=2000, rng=np.random.default_rng(4))

    assert report.mc_window_moment_ratio is not None
    assert report.mc_standard_error > 0


@pytest.mark.parametrize("d, eps, r", [(3, 0.0, 10), (3, 0.5, 10), (2, 0.1, 10), (3, 0.1, 0)])
def test_invalid_parameters(d, eps, r):
    with pytest.raises(InvalidParameterError):
        lemma7_checks(d, eps, r)


def test_deep_supercritical_report():
    report = lemma7_checks(3, 0.45, 1200)

    assert report.holds
    assert report.lower == pytest.approx(0.225)
