"""
Closed forms for bond percolation on the rooted d-regular tree, in which the root has d children and every other
node d - 1. Everything is expressed through the branching mean ``m = p(d-1)`` so that deep levels do not overflow.
"""

import math
from typing import Optional, Tuple

from mfperc.annotations import InvalidParameterError
from mfperc.util import power_or_inf

__all__ = [
    "level_mean",
    "level_second_moment",
    "window_sum_moment",
    "effective_resistance",
    "survival_bounds",
    "survival_exact"
]


def _check(d: int, p: float, r: Optional[int] = 0) -> None:
    if d < 2:
        raise InvalidParameterError(f"Tree degree must be at least 2, got {d}")
    if not 0 <= p <= 1:
        raise InvalidParameterError(f"p must lie in [0, 1], got {p}")
    if r is not None and r < 0:
        raise InvalidParameterError(f"Level must be nonnegative, got {r}")


def level_mean(d: int, p: float, r: int) -> float:
    "``E H_r = d(d-1)^(r-1) p^r``, with ``E H_0 = 1``."
    _check(d, p, r)
    if r == 0:
        return 1.0
    return d * p * power_or_inf(p * (d - 1), r - 1)


def level_second_moment(d: int, p: float, r: int) -> float:
    """
    The exact second moment of the level-r occupation, counting ordered pairs of level-r nodes.
    A pair whose paths to the root split at depth ``j`` is open with probability ``p^(2r-j)``.
    There are ``d(d-1)^(r-1)`` diagonal pairs, ``d(d-1)^(2r-1)`` ordered pairs splitting at the root and
    ``d(d-2)(d-1)^(2r-j-2)`` splitting at depth ``1 <= j < r``.
    """
    _check(d, p, r)
    if r == 0:
        return 1.0
    m = p * (d - 1)
    diagonal = level_mean(d, p, r)
    at_root = d * power_or_inf(m, 2 * r - 1) * p
    below = sum(d * (d - 2) * power_or_inf(m, 2 * r - j - 2) * p * p for j in range(1, r))
    return diagonal + at_root + below


def window_sum_moment(d: int, p: float, r: int) -> float:
    """
    ``E[(H_{r//2} + ... + H_r)^2 | H_{r//2} > 0]``, using ``E[H_a H_b] = m^(a-b) E[H_b^2]`` for ``a >= b >= 1``
    and ``E[H_a H_0] = E[H_a]``.
    """
    _check(d, p, r)
    half = r // 2
    survival = survival_exact(d, p, half) if half > 0 else 1.0
    if survival == 0:
        return 0.0
    m = p * (d - 1)
    total = 0.0
    for low in range(half, r + 1):
        if low == 0:
            total += 1 + 2 * sum(level_mean(d, p, high) for high in range(1, r + 1))
            continue
        second = level_second_moment(d, p, low)
        total += second + 2 * second * sum(power_or_inf(m, high - low) for high in range(low + 1, r + 1))
    return total / survival


def effective_resistance(d: int, p: float, r: Optional[int]) -> float:
    """
    The effective resistance from the root to level ``r`` when an edge entering level ``b`` has resistance
    ``(1-p) / p^b``.

    :param r: The level. ``None`` gives the resistance to infinity.
    :return: The resistance, ``math.inf`` if ``p = 0`` (or if the infinite series diverges).
    """
    _check(d, p, r)
    if p == 0:
        return math.inf
    if p == 1:
        return 0.0
    m = p * (d - 1)
    factor = (1 - p) * (d - 1) / d
    if r is None:
        return factor / (m - 1) if m > 1 else math.inf
    return factor * _geometric_inverse_sum(m, r)


def _geometric_inverse_sum(m: float, r: int) -> float:
    "``m^-1 + ... + m^-r`` as ``(m^-r - 1) / (1 - m)``, ``math.inf`` on overflow."
    if m == 1:
        return float(r)
    try:
        return math.expm1(-r * math.log(m)) / (1 - m)
    except OverflowError:
        return math.inf


def survival_bounds(d: int, p: float, r: int) -> Tuple[float, float]:
    "The lower and upper bounds ``1/(1+R_r)`` and ``min(1, 2/(1+R_r))`` on ``P(H_r > 0)``."
    resistance = effective_resistance(d, p, r)
    if math.isinf(resistance):
        return 0.0, 0.0
    return 1 / (1 + resistance), min(1.0, 2 / (1 + resistance))


def survival_exact(d: int, p: float, r: int) -> float:
    """
    ``P(H_r > 0)`` by the branching recursion ``u_k = 1 - (1 - p u_{k-1})^(d-1)`` with ``u_0 = 1``,
    closed at the root by ``1 - (1 - p u_{r-1})^d``.
    """
    _check(d, p, r)
    if r == 0:
        return 1.0
    u = 1.0
    for _ in range(r - 1):
        u = 1 - (1 - p * u) ** (d - 1)
    return 1 - (1 - p * u) ** d
