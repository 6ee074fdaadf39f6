import math
from dataclasses import dataclass
from typing import Optional

from mfperc.annotations import HorizonError, InvalidParameterError, StructureError
from mfperc.graph import Graph
from mfperc.nbrw import ReturnProfile, averaged_return_profile

__all__ = [
    "lemma12_lower_bound",
    "covering_lower_bound",
    "impurity_triple_sum",
    "Lemma1314Report",
    "lemma13_14_assumptions"
]


def _regular_degree(g: Graph) -> int:
    if g.degree is None:
        raise StructureError("Coupling bounds need a regular graph")
    return g.degree


def _profile(g: Graph, horizon: int, profile: Optional[ReturnProfile]) -> ReturnProfile:
    if profile is None:
        return averaged_return_profile(g, horizon)
    if profile.horizon < horizon:
        raise HorizonError(f"Return profile reaches {profile.horizon}, {horizon} steps are needed", required=horizon)
    return profile


def impurity_triple_sum(d: int, growth: float, r: int, profile: ReturnProfile) -> float:
    """
    ``d/(d-1) * sum over 1 <= j < k <= h <= r of growth^(k-j) R[h+k-2j-1]``.
    """
    required = max(2 * r - 3, 1)
    if profile.horizon < required:
        raise HorizonError(f"Return profile reaches {profile.horizon}, {required} steps are needed", required=required)
    total = 0.0
    for h in range(2, r + 1):
        for k in range(2, h + 1):
            for j in range(1, k):
                total += growth ** (k - j) * profile[h + k - 2 * j - 1]
    return d / (d - 1) * total


def lemma12_lower_bound(
        g: Graph,
        p: float,
        r: int,
        a_size: int,
        profile: Optional[ReturnProfile] = None
) -> float:
    """
    The Markov-inequality lower bound on ``E |shell r of the ball around a uniform vertex in G - A|``:
    ``(p(d-1))^r [1 - r|A|/n - d/(d-1) sum_{h,k,j} (p(d-1))^(k-j) R[h+k-2j-1]]``.

    Only meetings of two tree paths strictly below the root are accounted for. On graphs with girth above ``2r``
    the sum vanishes; on denser graphs ``covering_lower_bound`` is the one to compare with.

    :param profile: The vertex-averaged return profile, reaching ``2r``.
    :exception HorizonError: Raised if ``profile`` is too short.
    """
    d = _regular_degree(g)
    if r < 1 or a_size < 0:
        raise InvalidParameterError(f"Need r >= 1 and |A| >= 0, got r={r}, |A|={a_size}")
    profile = _profile(g, 2 * r, profile)
    m = p * (d - 1)
    return m ** r * (1 - r * a_size / g.n - impurity_triple_sum(d, m, r, profile))


def covering_lower_bound(
        g: Graph,
        p: float,
        r: int,
        a_size: int,
        profile: Optional[ReturnProfile] = None
) -> float:
    """
    A lower bound on ``E |shell r|`` around a uniform vertex of ``G - A`` that counts every way a node on the path
    to a uniform depth-r tree node can become impure:

    - a node ``u`` of depth ``k`` branching off the path at depth ``j >= 1``,
      ``d/(d-1) (p(d-1))^(k-j) R[h+k-2j]``;
    - a node branching off at the root, ``(p(d-1))^k R[h+k]``;
    - the root itself, ``R[h]``, and an ancestor at depth ``k >= 1``, ``d/(d-1) R[h-k]``.

    The path meets ``A`` with probability at most ``r|A|/(n-|A|)``.

    :param profile: The vertex-averaged return profile, reaching ``2r``.
    :exception HorizonError: Raised if ``profile`` is too short.
    """
    d = _regular_degree(g)
    if r < 1 or not 0 <= a_size < g.n:
        raise InvalidParameterError(f"Need r >= 1 and 0 <= |A| < n, got r={r}, |A|={a_size}")
    profile = _profile(g, 2 * r, profile)
    m = p * (d - 1)
    ratio = d / (d - 1)

    penalty = r * a_size / (g.n - a_size)
    for h in range(1, r + 1):
        penalty += profile[h]
        penalty += ratio * sum(profile[h - k] for k in range(1, h))
        for k in range(1, h + 1):
            penalty += m ** k * profile[h + k]
            penalty += ratio * sum(m ** (k - j) * profile[h + k - 2 * j] for j in range(1, k))
    return m ** r * (1 - penalty)


@dataclass(frozen=True)
class Lemma1314Report:
    """
    The inputs of the second-moment lower bound on ``P(|ball of radius r in G - A| >= M)``.
    ``sign`` is +1 for ``p = (1+eps)/(d-1)`` and -1 for ``p = (1-eps)/(d-1)``. ``conclusion`` is the eps-r part of
    the resulting lower bound; the constant in front of it is not known.
    """
    sign: int
    eps: float
    r: int
    M: int
    triple_sum: float
    assumption1: bool
    assumption2_rhs: float
    assumption2: bool
    conclusion: float
    max_a_size: float


def lemma13_14_assumptions(
        g: Graph,
        eps: float,
        sign: int,
        r: int,
        M: int,
        profile: Optional[ReturnProfile] = None
) -> Lemma1314Report:
    """
    Evaluates both assumptions of the ball-size lower bound:
    (1) ``d/(d-1) sum_{h,k,j} (1 +- eps)^(k-j) R[h+k-2j-1] <= 1/2`` and
    (2) ``96 M < eps^-2 ((1+eps)^r - (1+eps)^(r/2)) (1 - e^(-eps r/4))`` for ``sign = +1``,
    ``96 M < eps^-1 r ((1-eps)^(r/2) - (1-eps)^r)`` for ``sign = -1``.
    The bound applies to sets ``A`` with ``|A| <= n/(4r)``.
    """
    if sign not in (1, -1):
        raise InvalidParameterError(f"sign must be +1 or -1, got {sign}")
    if not 0 < eps < 0.5 or r < 1:
        raise InvalidParameterError(f"Need eps in (0, 1/2) and r >= 1, got eps={eps}, r={r}")
    d = _regular_degree(g)
    profile = _profile(g, 2 * r, profile)

    growth = 1 + sign * eps
    triple = impurity_triple_sum(d, growth, r, profile)
    if sign > 0:
        rhs = eps ** -2 * ((1 + eps) ** r - (1 + eps) ** (r / 2)) * (1 - math.exp(-eps * r / 4))
        conclusion = eps * (1 - (1 + eps) ** (-r / 2)) ** 2 * (1 - math.exp(-r * eps / 4)) ** 3
    else:
        rhs = r / eps * ((1 - eps) ** (r / 2) - (1 - eps) ** r)
        conclusion = eps ** 3 * r ** 2 * (1 - eps) ** r * ((1 - eps) ** (r / 2) - (1 - eps) ** r) ** 2

    return Lemma1314Report(
        sign=sign, eps=eps, r=r, M=M,
        triple_sum=triple,
        assumption1=triple <= 0.5,
        assumption2_rhs=rhs,
        assumption2=96 * M < rhs,
        conclusion=conclusion,
        max_a_size=g.n / (4 * r)
    )
