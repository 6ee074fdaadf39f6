import math

import numpy as np
import pytest

from mfperc.annotations import InvalidParameterError
from mfperc.tree import level_mean, level_second_moment, window_sum_moment, effective_resistance, \
    survival_bounds, survival_exact
from mfperc_test.util import tree_level_distribution

P_GRID = np.linspace(0.02, 0.98, 20)


@pytest.mark.parametrize("r", [0, 1, 2, 3])
@pytest.mark.parametrize("p", [0.1, 0.5, 0.9])
def test_moments_match_exact_law(r, p):
    law = tree_level_distribution(3, p, r)
    k = np.arange(len(law))

    assert law.sum() == pytest.approx(1.0)
    assert level_mean(3, p, r) == pytest.approx(float(k @ law))
    assert level_second_moment(3, p, r) == pytest.approx(float((k ** 2) @ law))
    assert survival_exact(3, p, r) == pytest.approx(1 - law[0])


def test_level_mean():
    assert level_mean(4, 0.5, 0) == 1
    assert level_mean(4, 0.5, 3) == pytest.approx(4 * 3 ** 2 * 0.5 ** 3)


def test_window_sum_moment_exact():
    d, p = 3, 0.4
    # E[(H_1 + H_2)^2 | H_1 > 0] with H_1 ~ Bin(3, p) and H_2 | H_1 ~ Bin(2 H_1, p)
    total = 0.0
    for h1 in range(1, 4):
        w1 = math.comb(3, h1) * p ** h1 * (1 - p) ** (3 - h1)
        for h2 in range(2 * h1 + 1):
            w2 = math.comb(2 * h1, h2) * p ** h2 * (1 - p) ** (2 * h1 - h2)
            total += w1 * w2 * (h1 + h2) ** 2
    expected = total / (1 - (1 - p) ** 3)

    assert window_sum_moment(d, p, 2) == pytest.approx(expected)
    assert window_sum_moment(d, p, 3) > 0


def test_window_sum_moment_r1():
    d, p = 3, 0.3
    # (H_0 + H_1)^2 with H_0 = 1
    expected = 1 + 2 * d * p + level_second_moment(d, p, 1)

    assert window_sum_moment(d, p, 1) == pytest.approx(expected)


def test_effective_resistance():
    assert effective_resistance(3, 0.5, 2) == pytest.approx(2 / 3)
    assert effective_resistance(3, 0.0, 5) == math.inf
    assert effective_resistance(3, 1.0, 5) == 0.0
    assert effective_resistance(3, 0.5, None) == math.inf
    assert effective_resistance(3, 0.75, None) == pytest.approx(0.25 * 2 / 3 / 0.5)


def test_effective_resistance_matches_series():
    m = 0.4 * 2
    series = sum(m ** -i for i in range(1, 11))

    assert effective_resistance(3, 0.4, 10) == pytest.approx(0.6 * 2 / 3 * series)
    assert effective_resistance(3, 0.7, 10) == pytest.approx(0.3 * 2 / 3 * sum(1.4 ** -i for i in range(1, 11)))


def test_deep_subcritical_levels():
    assert effective_resistance(3, 0.001, 200) == math.inf
    assert survival_bounds(3, 0.001, 200) == (0.0, 0.0)
    assert level_mean(3, 0.001, 200) == 0.0
    assert window_sum_moment(3, 0.001, 200) == 0.0


def test_deep_supercritical_levels():
    assert level_mean(1000, 0.9, 500) == math.inf
    assert level_second_moment(1000, 0.9, 500) == math.inf


def test_effective_resistance_increases_with_depth():
    values = [effective_resistance(4, 0.3, r) for r in range(1, 20)]

    assert values == sorted(values)


@pytest.mark.parametrize("d", [3, 4, 5, 10])
def test_survival_within_resistance_bounds(d):
    for p in P_GRID:
        for r in range(1, 51):
            lower, upper = survival_bounds(d, p, r)
            q = survival_exact(d, p, r)
            assert lower - 1e-12 <= q <= upper + 1e-12


def test_survival_bounds_p_zero():
    assert survival_bounds(3, 0.0, 4) == (0.0, 0.0)
    assert survival_exact(3, 0.0, 4) == 0.0


@pytest.mark.parametrize("d, p, r", [(1, 0.5, 2), (3, 1.5, 2), (3, -0.1, 2), (3, 0.5, -1)])
def test_invalid_parameters(d, p, r):
    with pytest.raises(InvalidParameterError):
        level_mean(d, p, r)
