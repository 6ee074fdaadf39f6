import math
from typing import Union

from mfperc.annotations import InvalidParameterError
from mfperc.nbrw import ReturnProfile

__all__ = [
    "expander_pt_bound",
    "condition1_bound_expander",
    "hamming3_pt_bound",
    "girth_condition_lhs",
    "fit_mixing_constant"
]

# Absorbs rounding in C * ln(n) when C was fitted from an integer step
_LOG_SLACK = 1e-9


def _geometric_term(d: int, girth: Union[int, float]) -> float:
    if math.isinf(girth):
        return 0.0
    return (d - 1) ** -(int(girth) // 2)


def expander_pt_bound(d: int, girth: Union[int, float], n: int, C: float, t: int) -> float:
    """
    The piecewise bound on the return probability of an expander:
    0 before the girth, ``(d-1)^-floor(g/2)`` up to ``C ln n`` and ``4/n`` afterwards.
    """
    if t < 1:
        raise InvalidParameterError(f"t must be positive, got {t}")
    if t < girth:
        return 0.0
    if t < C * math.log(n) - _LOG_SLACK:
        return _geometric_term(d, girth)
    return 4 / n


def condition1_bound_expander(d: int, girth: Union[int, float], n: int, C: float) -> float:
    "``C^2 n^(1/3) ln^2 n (d-1)^-floor(g/2) + 2``"
    return C ** 2 * n ** (1 / 3) * math.log(n) ** 2 * _geometric_term(d, girth) + 2


def hamming3_pt_bound(m: int, t: int, C: float) -> float:
    """
    The piecewise bound on the return probability of H(3, m), where ``d = 3(m-1)`` and ``n = m^3``.
    """
    if m < 2:
        raise InvalidParameterError(f"m must be at least 2, got {m}")
    d, n = 3 * (m - 1), m ** 3
    if t < 3:
        return 0.0
    if t < C * math.log(n) - _LOG_SLACK:
        return 3 / (d - 1) * ((2 / 3) ** (t - 1) + t / (d - 1))
    return 2 / n


def girth_condition_lhs(d: int, girth: Union[int, float], n: int) -> float:
    "``(d-1)^-floor(g/2) n^(1/3) ln^2 n``; the girth condition asks for this to vanish along a family."
    return _geometric_term(d, girth) * n ** (1 / 3) * math.log(n) ** 2


def fit_mixing_constant(profile: ReturnProfile, n: int) -> float:
    """
    The smallest C such that ``R[t] <= 4/n`` for every ``t >= C ln n`` within the horizon of the profile.
    """
    if n < 2:
        raise InvalidParameterError(f"n must be at least 2, got {n}")
    threshold = 4 / n
    last_violation = 0
    for t in range(1, profile.horizon + 1):
        if profile[t] > threshold:
            last_violation = t
    return (last_violation + 1) / math.log(n)
