import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional, List, Tuple

import numpy as np

from mfperc.annotations import StructureError, CapacityError, InvalidParameterError
from mfperc.config import DEFAULTS
from mfperc.graph import Graph, girth
from mfperc.nbrw.edge_space import DirectedEdgeSpace
from mfperc.util import log, ceil_cbrt

__all__ = [
    "ReturnProfile",
    "return_probabilities",
    "averaged_return_profile",
    "default_horizon",
    "sample_nbrw",
    "sample_return_frequency",
    "loop_identity_residual"
]


@dataclass(frozen=True)
class ReturnProfile:
    """
    Return probabilities of the non-backtracking walk.
    ``values[s]`` is the probability of being back at the origin after exactly ``s`` edge traversals,
    ``values[0] = 1``.
    """
    origin: Optional[int]
    horizon: int
    values: np.ndarray
    averaged: bool = False

    def __getitem__(self, s: int) -> float:
        return float(self.values[s])

    def scaled(self, factor: float) -> "ReturnProfile":
        "A copy with ``values[1:]`` multiplied by ``factor``."
        values = self.values.copy()
        values[1:] *= factor
        return ReturnProfile(self.origin, self.horizon, values, self.averaged)


def _check_horizon(horizon: int) -> None:
    if horizon < 1:
        raise InvalidParameterError(f"The horizon must be at least 1, got {horizon}")
    if horizon > DEFAULTS["nbrw_max_horizon"]:
        raise CapacityError(f"Horizon {horizon} exceeds the cap of {DEFAULTS['nbrw_max_horizon']}")


def return_probabilities(
        g: Graph,
        v: int,
        horizon: int,
        space: Optional[DirectedEdgeSpace] = None
) -> ReturnProfile:
    """
    Computes the exact return profile of the walk started at ``v`` by evolving a distribution over the directed
    edges. The first traversal picks one of the edges leaving ``v`` uniformly.

    :param g: The graph.
    :param v: The origin.
    :param horizon: The largest number of traversals.
    :param space: A prebuilt edge space of ``g``.
    :exception StructureError: Raised if a vertex has degree below 2.
    """
    _check_horizon(horizon)
    space = DirectedEdgeSpace(g) if space is None else space

    mu = np.zeros(space.size)
    out = space.out_edges(v)
    mu[out] = 1.0 / len(out)
    returning = space.in_edges(v)

    values = np.zeros(horizon + 1)
    values[0] = 1.0
    for s in range(1, horizon + 1):
        values[s] = mu[returning].sum()
        if s < horizon:
            mu = space.forward @ mu

    return ReturnProfile(origin=v, horizon=horizon, values=values)


def averaged_return_profile(
        g: Graph,
        horizon: int,
        space: Optional[DirectedEdgeSpace] = None
) -> ReturnProfile:
    """
    The return profile averaged over all origins. Vertex-transitive graphs use vertex 0.
    Otherwise ``average_profile_batch`` origins are evolved together as the columns of one matrix.
    """
    _check_horizon(horizon)
    space = DirectedEdgeSpace(g) if space is None else space

    if g.transitive:
        profile = return_probabilities(g, 0, horizon, space)
        return ReturnProfile(origin=None, horizon=horizon, values=profile.values, averaged=True)

    batch = DEFAULTS["average_profile_batch"]
    totals = np.zeros(horizon + 1)
    for start in range(0, g.n, batch):
        origins = range(start, min(start + batch, g.n))
        mu = np.zeros((space.size, len(origins)))
        rows, cols = [], []
        for c, v in enumerate(origins):
            out = space.out_edges(v)
            mu[out, c] = 1.0 / len(out)
            returning = space.in_edges(v)
            rows.append(returning)
            cols.append(np.full(len(returning), c))
        rows, cols = np.concatenate(rows), np.concatenate(cols)

        for s in range(1, horizon + 1):
            totals[s] += mu[rows, cols].sum()
            if s < horizon:
                mu = space.forward @ mu
        log(f"Averaged return profile: {origins.stop}/{g.n} origins done")

    values = totals / g.n
    values[0] = 1.0
    return ReturnProfile(origin=None, horizon=horizon, values=values, averaged=True)


def default_horizon(g: Graph) -> int:
    "``2 * ceil(n^(1/3)) + girth``, capped at ``nbrw_max_horizon``. Forests contribute no girth term."
    g_len = girth(g)
    horizon = 2 * ceil_cbrt(g.n) + (0 if math.isinf(g_len) else int(g_len))
    return min(horizon, DEFAULTS["nbrw_max_horizon"])


def sample_nbrw(g: Graph, v: int, steps: int, rng: np.random.Generator) -> List[int]:
    """
    Samples a trajectory of the non-backtracking walk.

    :param g: The graph, minimum degree 2.
    :param v: The start vertex.
    :param steps: The number of traversals.
    :param rng: The random number generator.
    :return: The ``steps + 1`` visited vertices, starting with ``v``.
    """
    if g.min_degree < 2:
        raise StructureError("The non-backtracking walk needs minimum degree 2")

    path = [v]
    previous, current = -1, v
    for _ in range(steps):
        neighbours = g.neighbors(current)
        if previous < 0:
            following = neighbours[int(rng.integers(len(neighbours)))]
        else:
            k = int(rng.integers(len(neighbours) - 1))
            if k >= bisect_left(neighbours, previous):
                k += 1
            following = neighbours[k]
        previous, current = current, following
        path.append(following)
    return path


def sample_return_frequency(
        g: Graph,
        v: int,
        steps: int,
        samples: int,
        rng: np.random.Generator,
        space: Optional[DirectedEdgeSpace] = None
) -> Tuple[float, float]:
    """
    Estimates the return probability after ``steps`` traversals by running ``samples`` walks side by side.

    :return: The observed frequency and its standard error.
    """
    if steps < 1 or samples < 1:
        raise InvalidParameterError("steps and samples must be positive")
    space = DirectedEdgeSpace(g) if space is None else space
    degrees = g.degrees

    e = space.offsets[v] + rng.integers(degrees[v], size=samples)
    for _ in range(steps - 1):
        y = space.heads[e]
        k = rng.integers(degrees[y] - 1)
        k += k >= (space.reverse[e] - space.offsets[y])
        e = space.offsets[y] + k

    frequency = float(np.mean(space.heads[e] == v))
    return frequency, math.sqrt(frequency * (1 - frequency) / samples)


def loop_identity_residual(
        g: Graph,
        v: int,
        t: int,
        t2: int,
        space: Optional[DirectedEdgeSpace] = None
) -> float:
    """
    Compares two ways of counting non-backtracking loops at ``v``.

    For the neighbours ``v_1..v_d`` of ``v``, the left-hand side is the probability that walks started on the
    edges ``(v, v_i)`` and ``(v, v_j)``, ``i != j``, have the same head after ``t`` and ``t2`` transitions, summed
    over all ordered pairs. On a transitive graph it equals ``d(d-1) R[t + t2 + 2]``.

    :return: The absolute difference of both sides.
    :exception StructureError: Raised for irregular graphs.
    """
    d = g.degree
    if d is None:
        raise StructureError("The loop identity needs a regular graph")
    if not g.transitive:
        log("Loop identity evaluated on a graph not tagged transitive")
    space = DirectedEdgeSpace(g) if space is None else space

    def heads_after(steps: int) -> np.ndarray:
        mu = np.zeros((space.size, d))
        mu[space.out_edges(v), np.arange(d)] = 1.0
        for _ in range(steps):
            mu = space.forward @ mu
        return space.head_incidence @ mu

    first, second = heads_after(t), heads_after(t2)
    lhs = float(np.sum(first.sum(axis=1) * second.sum(axis=1)) - np.sum(first * second))
    rhs = d * (d - 1) * return_probabilities(g, v, t + t2 + 2, space)[t + t2 + 2]
    return abs(lhs - rhs)
