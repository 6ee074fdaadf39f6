from dataclasses import dataclass
from typing import Optional

import numpy as np

from mfperc.annotations import InvalidParameterError, CapacityError
from mfperc.config import DEFAULTS
from mfperc.graph import Graph
from mfperc.util import log

__all__ = [
    "EdgeMask",
    "sample_percolation"
]


@dataclass(frozen=True)
class EdgeMask:
    """
    One bond percolation configuration.

    ``bits`` holds one flag per edge id for explicit graphs and is ``None`` for implicit complete graphs, whose
    configuration is described by ``open_edges`` alone.
    """
    p: float
    open_edges: np.ndarray
    bits: Optional[np.ndarray] = None
    seed: Optional[int] = None

    @property
    def num_open(self) -> int:
        return len(self.open_edges)


def _all_pairs(n: int) -> np.ndarray:
    u, v = np.triu_indices(n, k=1)
    return np.column_stack([u, v]).astype(np.int64)


def _distinct_pairs(n: int, k: int, rng: np.random.Generator) -> np.ndarray:
    # Rejection sampling of k distinct unordered pairs, kept in order of first appearance
    keys = np.empty(0, dtype=np.int64)
    while len(keys) < k:
        batch = max(2 * (k - len(keys)), 1024)
        u = rng.integers(n, size=batch)
        v = rng.integers(n, size=batch)
        keep = u != v
        lo, hi = np.minimum(u, v)[keep], np.maximum(u, v)[keep]
        keys = np.concatenate([keys, lo * n + hi])
        _, first = np.unique(keys, return_index=True)
        keys = keys[np.sort(first)]
    keys = keys[:k]
    return np.column_stack([keys // n, keys % n])


def sample_percolation(
        g: Graph,
        p: float,
        rng: np.random.Generator,
        seed: Optional[int] = None
) -> EdgeMask:
    """
    Keeps every edge independently with probability ``p``.

    On implicit complete graphs with more than ``max_open_edges`` edges, the number of open edges is drawn from
    its binomial law and that many distinct pairs are drawn uniformly, which has the same distribution.

    :param g: The graph.
    :param p: The retention probability.
    :param rng: The random number generator.
    :param seed: The seed ``rng`` was created from, recorded in the mask.
    :exception CapacityError: Raised if an implicit sample would hold more than ``max_open_edges`` open edges.
    """
    if not 0 <= p <= 1:
        raise InvalidParameterError(f"p must lie in [0, 1], got {p}")
    cap = DEFAULTS["max_open_edges"]

    if not g.is_implicit:
        bits = rng.random(g.num_edges) < p
        return EdgeMask(p=p, open_edges=g.edges[bits], bits=bits, seed=seed)

    if g.num_edges <= cap:
        pairs = _all_pairs(g.n)
        bits = rng.random(len(pairs)) < p
        return EdgeMask(p=p, open_edges=pairs[bits], seed=seed)

    k = int(rng.binomial(g.num_edges, p))
    if k > cap or 2 * k > g.num_edges:
        raise CapacityError(f"{k} open edges on K_{g.n} exceed the cap of {cap}")
    log(f"Implicit K_{g.n}: drawing {k} open edges")
    return EdgeMask(p=p, open_edges=_distinct_pairs(g.n, k, rng), seed=seed)
