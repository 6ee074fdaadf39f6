import math
from dataclasses import dataclass
from typing import Optional, Tuple

from mfperc.annotations import StructureError, OutOfRegimeError, HorizonError
from mfperc.graph import Graph
from mfperc.nbrw import ReturnProfile, averaged_return_profile
from mfperc.util import floor_cbrt, log

__all__ = [
    "ConditionReport",
    "condition1_statistic",
    "condition2_statistic",
    "window_radius",
    "condition_report"
]


@dataclass(frozen=True)
class ConditionReport:
    n: int
    d: int
    S1: float
    eps: Optional[float] = None
    r: Optional[int] = None
    S2: Optional[float] = None
    averaged_over_vertices: bool = False


def _model_degree(g: Graph) -> int:
    if g.degree is None:
        raise StructureError("Condition statistics need a regular graph")
    if g.degree < 3:
        raise StructureError(f"Condition statistics need degree at least 3, got {g.degree}")
    return g.degree


def _profile(g: Graph, horizon: int, profile: Optional[ReturnProfile]) -> ReturnProfile:
    if profile is None:
        return averaged_return_profile(g, horizon)
    if profile.horizon < horizon:
        raise HorizonError(f"Return profile reaches {profile.horizon}, {horizon} steps are needed", required=horizon)
    return profile


def condition1_statistic(g: Graph, profile: Optional[ReturnProfile] = None) -> float:
    """
    Computes ``S1 = n^(1/3) * sum_{t=1}^{floor(n^(1/3))} t R[t]``.
    Graphs not tagged transitive use the return profile averaged over all vertices.

    :param g: A regular graph with degree at least 3.
    :param profile: A precomputed (averaged) return profile of ``g``.
    :exception StructureError: Raised for irregular graphs or degree below 3.
    """
    _model_degree(g)
    limit = floor_cbrt(g.n)
    profile = _profile(g, limit, profile)
    return g.n ** (1 / 3) * sum(t * profile[t] for t in range(1, limit + 1))


def window_radius(n: int, eps: float) -> int:
    """
    The radius ``r = floor(eps^-1 (ln(n eps^3) - 3 ln ln(n eps^3)))`` of the explored balls in the supercritical
    regime.

    :exception OutOfRegimeError: Raised if ``eps`` is not in ``(0, 1/2)``, if ``n eps^3 <= e`` or if the radius
        is below 1. The offending value is attached.
    """
    if not 0 < eps < 0.5:
        raise OutOfRegimeError(f"eps must lie in (0, 1/2), got {eps}", value=eps)
    x = n * eps ** 3
    if x <= math.e:
        raise OutOfRegimeError(f"n * eps^3 must exceed e, got {x}", value=x)
    r = math.floor((math.log(x) - 3 * math.log(math.log(x))) / eps)
    if r < 1:
        raise OutOfRegimeError(f"Window radius {r} is below 1 for n={n}, eps={eps}", value=r)
    return r


def condition2_statistic(
        g: Graph,
        eps: float,
        r: Optional[int] = None,
        profile: Optional[ReturnProfile] = None
) -> Tuple[int, float]:
    """
    Computes ``S2 = eps^-1 r sum_{t=1}^{2r} ((1 + eps)^min(t, r) - 1) R[t]``.

    :param g: A regular graph with degree at least 3.
    :param eps: The supercriticality.
    :param r: Overrides the window radius of ``(n, eps)``.
    :param profile: A precomputed (averaged) return profile reaching ``2r``.
    :return: The radius and the statistic.
    """
    _model_degree(g)
    r = window_radius(g.n, eps) if r is None else r
    profile = _profile(g, 2 * r, profile)
    total = sum(((1 + eps) ** min(t, r) - 1) * profile[t] for t in range(1, 2 * r + 1))
    return r, r * total / eps


def condition_report(g: Graph, eps: Optional[float] = None) -> ConditionReport:
    """
    Evaluates both statistics with a single return profile.
    Without ``eps``, or if ``eps`` is out of regime for ``g``, only ``S1`` is reported.
    """
    d = _model_degree(g)
    horizon = floor_cbrt(g.n)
    r = None
    if eps is not None:
        try:
            r = window_radius(g.n, eps)
            horizon = max(horizon, 2 * r)
        except OutOfRegimeError as e:
            log("No condition 2 statistic:", e)

    profile = averaged_return_profile(g, horizon)
    s1 = condition1_statistic(g, profile)
    s2 = condition2_statistic(g, eps, r, profile)[1] if r is not None else None
    return ConditionReport(
        n=g.n, d=d, S1=s1, eps=eps, r=r, S2=s2,
        averaged_over_vertices=not g.transitive
    )
