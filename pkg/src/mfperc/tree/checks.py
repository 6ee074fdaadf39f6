import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from mfperc.annotations import InvalidParameterError
from mfperc.tree.analytics import survival_exact, level_second_moment, window_sum_moment
from mfperc.tree.sampling import TreeParams, sample_tree_levels
from mfperc.util import log, power_or_inf

__all__ = [
    "TreeLemmaReport",
    "lemma7_checks",
    "lemma8_checks",
    "conditional_window_moment"
]


@dataclass(frozen=True)
class TreeLemmaReport:
    """
    Survival and moment estimates of slightly super- or subcritical tree percolation.

    The survival probability is checked against explicit bounds. The moment estimates only hold up to an
    unknown constant, so they are reported as ratios to their claimed order.
    """
    d: int
    eps: float
    r: int
    p: float
    survival: float
    lower: float
    upper: float
    second_moment_ratio: float
    window_moment_ratio: float
    mc_window_moment_ratio: Optional[float] = None
    mc_standard_error: Optional[float] = None

    @property
    def holds(self) -> bool:
        return self.lower <= self.survival <= self.upper


def conditional_window_moment(d: int, p: float, r: int, trials: int, rng: np.random.Generator):
    """
    Monte-Carlo estimate of ``E[(H_{r//2} + ... + H_r)^2 | H_{r//2} > 0]``.

    :return: The estimate and its standard error, ``(nan, nan)`` if no sample survived.
    """
    half = r // 2
    values = []
    for _ in range(trials):
        sample = sample_tree_levels(d, p, r, rng)
        if sample.H[half] > 0:
            values.append(sample.window_sum(half) ** 2)
    if not values:
        return math.nan, math.nan
    values = np.asarray(values, dtype=np.float64)
    error = values.std(ddof=1) / math.sqrt(len(values)) if len(values) > 1 else math.inf
    return float(values.mean()), float(error)


def _report(params: TreeParams, r: int, lower: float, upper: float, second_order: float, window_order: float,
            mc_trials: int, rng: Optional[np.random.Generator]) -> TreeLemmaReport:
    d, p, eps = params.d, params.p, abs(params.eps)
    survival = survival_exact(d, p, r)
    mc_ratio = mc_error = None
    if mc_trials > 0:
        rng = np.random.default_rng() if rng is None else rng
        estimate, error = conditional_window_moment(d, p, r, mc_trials, rng)
        mc_ratio, mc_error = estimate / window_order, error / window_order
        log(f"Monte-Carlo window moment over {mc_trials} trials: {estimate} +- {error}")

    return TreeLemmaReport(
        d=d, eps=eps, r=r, p=p,
        survival=survival,
        lower=lower,
        upper=upper,
        second_moment_ratio=level_second_moment(d, p, r) / second_order,
        window_moment_ratio=window_sum_moment(d, p, r) / window_order,
        mc_window_moment_ratio=mc_ratio,
        mc_standard_error=mc_error
    )


def _validate(d: int, eps: float, r: int) -> None:
    if not 0 < eps < 0.5:
        raise InvalidParameterError(f"eps must lie in (0, 1/2), got {eps}")
    if d < 3 or r < 1:
        raise InvalidParameterError(f"Need d >= 3 and r >= 1, got d={d}, r={r}")


def lemma7_checks(d: int, eps: float, r: int, mc_trials: int = 0,
                  rng: Optional[np.random.Generator] = None) -> TreeLemmaReport:
    """
    Supercritical tree, ``p = (1 + eps) / (d - 1)``:
    ``eps/2 <= P(H_r > 0) <= 12 eps / (1 - e^(-eps r / 2))``,
    ``E H_r^2`` of order ``(1 + eps)^(2r) / eps`` and the conditional window moment of order
    ``(1 + eps)^(2r) / eps^4``.

    :param mc_trials: Trials of the Monte-Carlo window moment, 0 skips it.
    """
    _validate(d, eps, r)
    return _report(
        TreeParams.from_eps(d, eps, 1), r,
        lower=eps / 2,
        upper=12 * eps / (1 - math.exp(-eps * r / 2)),
        second_order=power_or_inf(1 + eps, 2 * r) / eps,
        window_order=power_or_inf(1 + eps, 2 * r) / eps ** 4,
        mc_trials=mc_trials, rng=rng
    )


def lemma8_checks(d: int, eps: float, r: int, mc_trials: int = 0,
                  rng: Optional[np.random.Generator] = None) -> TreeLemmaReport:
    """
    Subcritical tree, ``p = (1 - eps) / (d - 1)``:
    ``eps (1 - eps)^r / 2 <= P(H_r > 0) <= 12 / r``,
    ``E H_r^2`` of order ``(1 - eps)^r / eps`` and the conditional window moment of order ``r / eps^3``.
    """
    _validate(d, eps, r)
    return _report(
        TreeParams.from_eps(d, eps, -1), r,
        lower=eps * (1 - eps) ** r / 2,
        upper=12 / r,
        second_order=(1 - eps) ** r / eps,
        window_order=r / eps ** 3,
        mc_trials=mc_trials, rng=rng
    )
