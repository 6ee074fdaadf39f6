from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.sparse import csgraph

from mfperc.annotations import InvalidParameterError, CapacityError
from mfperc.config import DEFAULTS
from mfperc.graph import Graph
from mfperc.percolation.components import open_subgraph
from mfperc.percolation.sampling import EdgeMask
from mfperc.util import log

__all__ = [
    "DiameterEstimate",
    "diameter",
    "mixing_time_tv"
]

# Sources per batch of breadth-first searches
_DIAMETER_BATCH = 256


@dataclass(frozen=True)
class DiameterEstimate:
    "``exact`` is false if ``length`` is only a lower bound from repeated sweeps."
    length: int
    exact: bool


def _component_graph(g: Graph, mask: EdgeMask, component: np.ndarray):
    component = np.asarray(component, dtype=np.int64)
    if component.size == 0:
        raise InvalidParameterError("The component is empty")
    return open_subgraph(g.n, mask)[component][:, component]


def diameter(
        g: Graph,
        mask: EdgeMask,
        component: np.ndarray,
        exact: Optional[bool] = None,
        seed: int = 0
) -> DiameterEstimate:
    """
    The largest distance between two vertices of an open cluster.

    :param component: The vertices of the cluster.
    :param exact: Force (or forbid) a breadth-first search from every vertex. By default the search is exact up to
        ``diameter_exact_max`` vertices. Otherwise ``diameter_sweeps`` double sweeps give a lower bound.
    :param seed: Picks the start vertices of the sweeps.
    """
    sub = _component_graph(g, mask, component)
    size = sub.shape[0]
    exact = size <= DEFAULTS["diameter_exact_max"] if exact is None else exact

    if exact:
        longest = 0
        for start in range(0, size, _DIAMETER_BATCH):
            sources = np.arange(start, min(start + _DIAMETER_BATCH, size))
            dist = csgraph.shortest_path(sub, directed=False, unweighted=True, indices=sources)
            longest = max(longest, int(dist[np.isfinite(dist)].max()))
        return DiameterEstimate(length=longest, exact=True)

    rng = np.random.default_rng(seed)
    longest = 0
    for _ in range(DEFAULTS["diameter_sweeps"]):
        x = int(rng.integers(size))
        for _ in range(2):
            dist = csgraph.shortest_path(sub, directed=False, unweighted=True, indices=x)
            dist[~np.isfinite(dist)] = -1
            x = int(np.argmax(dist))
            longest = max(longest, int(dist[x]))
    log(f"Diameter of a {size} vertex cluster estimated by sweeps: >= {longest}")
    return DiameterEstimate(length=longest, exact=False)


def _worst_distance(power: np.ndarray, stationary: np.ndarray) -> float:
    return 0.5 * float(np.abs(power - stationary).sum(axis=1).max())


def mixing_time_tv(
        g: Graph,
        mask: EdgeMask,
        component: np.ndarray,
        threshold: Optional[float] = None
) -> int:
    """
    The total variation mixing time of the lazy simple random walk on an open cluster: the least ``t`` such that
    from every start the law after ``t`` steps is within ``threshold`` of stationarity.

    Powers ``P^(2^k)`` are squared until the distance drops below the threshold, then ``t`` is located between
    the last two powers by binary search with the stored powers.

    :exception CapacityError: Raised for clusters larger than ``mixing_max_size``.
    """
    threshold = DEFAULTS["mixing_threshold"] if threshold is None else threshold
    sub = _component_graph(g, mask, component)
    size = sub.shape[0]
    if size > DEFAULTS["mixing_max_size"]:
        raise CapacityError(f"Cluster of {size} vertices exceeds the mixing cap of {DEFAULTS['mixing_max_size']}")
    if size == 1:
        return 0

    adjacency = sub.toarray().astype(np.float64)
    degrees = adjacency.sum(axis=1)
    step = 0.5 * np.eye(size) + 0.5 * adjacency / degrees[:, None]
    stationary = degrees / degrees.sum()

    powers = [step]
    while _worst_distance(powers[-1], stationary) > threshold:
        if len(powers) > 60:
            raise CapacityError("Mixing time exceeds 2^60 steps")
        powers.append(powers[-1] @ powers[-1])

    k = len(powers) - 1
    if k == 0:
        return 1

    # P^t with t = 2^(k-1) is still too far; add lower powers of two while that remains the case
    t = 2 ** (k - 1)
    current = powers[k - 1]
    for i in range(k - 2, -1, -1):
        candidate = current @ powers[i]
        if _worst_distance(candidate, stationary) > threshold:
            current = candidate
            t += 2 ** i
    return t + 1
