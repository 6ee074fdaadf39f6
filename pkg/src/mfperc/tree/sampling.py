from dataclasses import dataclass
from typing import Optional

import numpy as np

from mfperc.annotations import InvalidParameterError, SampleTruncated
from mfperc.config import DEFAULTS

__all__ = [
    "TreeParams",
    "LevelSample",
    "sample_tree_levels",
    "cluster_size"
]


@dataclass(frozen=True)
class TreeParams:
    """
    Percolation on the d-regular tree. With ``eps`` set, ``p = (1 + sign * eps) / (d - 1)``.
    """
    d: int
    p: float
    eps: Optional[float] = None

    def __post_init__(self):
        if self.d < 3:
            raise InvalidParameterError(f"Tree degree must be at least 3, got {self.d}")
        if not 0 <= self.p <= 1:
            raise InvalidParameterError(f"p must lie in [0, 1], got {self.p}")
        if self.eps is not None and not 0 < abs(self.eps) < 0.5:
            raise InvalidParameterError(f"|eps| must lie in (0, 1/2), got {self.eps}")

    @classmethod
    def from_eps(cls, d: int, eps: float, sign: int = 1) -> "TreeParams":
        if sign not in (1, -1):
            raise InvalidParameterError(f"sign must be +1 or -1, got {sign}")
        return cls(d=d, p=(1 + sign * eps) / (d - 1), eps=sign * eps)


@dataclass(frozen=True)
class LevelSample:
    """
    Level occupations of one percolation sample; ``H[0] = 1`` is the root.
    """
    H: np.ndarray

    @property
    def depth(self) -> int:
        return len(self.H) - 1

    def window_sum(self, low: int) -> int:
        return int(self.H[low:].sum())


def sample_tree_levels(d: int, p: float, r: int, rng: np.random.Generator) -> LevelSample:
    """
    Samples the number of open-connected nodes on each of the levels ``0..r``.
    Given ``H_k``, the level ``k + 1`` is binomial over the ``(d - 1) H_k`` child edges (``d`` at the root),
    so closed subtrees are never materialized.

    :exception SampleTruncated: Raised once the total count exceeds ``tree_node_cap``. The levels reached so far
        are attached.
    """
    if r < 0:
        raise InvalidParameterError(f"Depth must be nonnegative, got {r}")
    cap = DEFAULTS["tree_node_cap"]
    levels = np.zeros(r + 1, dtype=np.int64)
    levels[0] = 1
    total = 1
    for k in range(1, r + 1):
        edges = d if k == 1 else (d - 1) * int(levels[k - 1])
        if edges == 0:
            break
        levels[k] = rng.binomial(edges, p)
        total += int(levels[k])
        if total > cap:
            raise SampleTruncated(f"Tree sample exceeded {cap} nodes at level {k}", sample=LevelSample(levels[:k + 1]))
    return LevelSample(levels)


def cluster_size(d: int, p: float, rng: np.random.Generator, limit: int) -> int:
    """
    Samples the size of the open cluster of the root, explored level by level.

    :return: The size, or ``limit + 1`` if it exceeds ``limit``.
    """
    total, level, k = 1, 1, 0
    while level and total <= limit:
        level = int(rng.binomial(d * level if k == 0 else (d - 1) * level, p))
        total += level
        k += 1
    return min(total, limit + 1)
