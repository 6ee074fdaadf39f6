from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Tuple, Optional, List, Collection, Set, Protocol

import numpy as np

from mfperc.annotations import InvalidParameterError
from mfperc.graph import Graph
from mfperc.percolation.sampling import EdgeMask
from mfperc.util import log


__all__ = [
    "CoinSource",
    "CoinLedger",
    "BallResult",
    "ball",
    "StepRecord",
    "MultiRootOutcome",
    "multi_root_process"
]


class CoinSource(Protocol):
    def is_open(self, u: int, w: int) -> bool:
        ...


class CoinLedger:
    """
    Reveals the state of edges lazily and remembers every revealed state, so that all explorations sharing a
    ledger see one percolation configuration.
    """

    def __init__(self, p: float, rng: Optional[np.random.Generator] = None, mask: Optional[EdgeMask] = None):
        """
        :param p: The retention probability of unrevealed edges.
        :param rng: Flips the coins of unrevealed edges.
        :param mask: Backs the ledger with a complete configuration instead of fresh coins.
        """
        if mask is None and rng is None:
            raise InvalidParameterError("A coin ledger needs a random number generator or an edge mask")
        self.p = p
        self._rng = rng
        self._coins: Dict[Tuple[int, int], bool] = {}
        self._open: Optional[Set[Tuple[int, int]]] = None
        if mask is not None:
            self._open = {(int(u), int(v)) for u, v in mask.open_edges}

    @classmethod
    def from_mask(cls, mask: EdgeMask) -> "CoinLedger":
        return cls(mask.p, mask=mask)

    def is_open(self, u: int, w: int) -> bool:
        key = (u, w) if u < w else (w, u)
        state = self._coins.get(key)
        if state is None:
            if self._open is not None:
                state = key in self._open
            else:
                state = bool(self._rng.random() < self.p)
            self._coins[key] = state
        return state

    @property
    def revealed(self) -> int:
        return len(self._coins)

    def __contains__(self, edge: Tuple[int, int]) -> bool:
        u, w = edge
        return ((u, w) if u < w else (w, u)) in self._coins


@dataclass(frozen=True)
class BallResult:
    """
    A restricted ball. ``shells[k]`` lists the vertices at restricted distance ``k`` in order of discovery and
    ``height`` maps every vertex of the ball to its distance.
    """
    center: int
    radius: int
    shells: List[List[int]]
    height: Dict[int, int]

    @property
    def size(self) -> int:
        return len(self.height)

    def boundary(self, k: int) -> int:
        return len(self.shells[k])


def ball(
        g: Graph,
        v: int,
        r: int,
        coins: CoinSource,
        A: Collection[int] = ()
) -> BallResult:
    """
    Explores the ball of radius ``r`` around ``v`` in the open subgraph of ``G - A`` with a FIFO queue.

    A dequeued vertex of height below ``r`` reveals the edges to its neighbours that are neither in ``A`` nor seen
    yet; every open one makes the neighbour active with height one more. Vertices of height ``r`` are not expanded.

    :param g: The graph.
    :param v: The center.
    :param r: The radius.
    :param coins: Decides whether an edge is open, e.g. a ``CoinLedger``.
    :param A: Vertices excluded from the exploration.
    :exception InvalidParameterError: Raised if ``v`` is in ``A``.
    """
    if v in A:
        raise InvalidParameterError(f"The center {v} lies in the excluded set")
    if r < 0:
        raise InvalidParameterError(f"Radius must be nonnegative, got {r}")

    height = {v: 0}
    shells: List[List[int]] = [[v]] + [[] for _ in range(r)]
    queue = deque([v])
    while queue:
        u = queue.popleft()
        h = height[u]
        if h >= r:
            continue
        for w in g.neighbors(u):
            if w in height or w in A:
                continue
            if coins.is_open(u, w):
                height[w] = h + 1
                shells[h + 1].append(w)
                queue.append(w)

    return BallResult(center=v, radius=r, shells=shells, height=height)


@dataclass(frozen=True)
class StepRecord:
    t: int
    root: int
    ball_size: int
    success: bool
    explored: int


@dataclass
class MultiRootOutcome:
    """
    The course of the multi-root exploration. ``halted_reason`` is ``success``, ``exhausted`` or ``t_max``.
    """
    steps: List[StepRecord] = field(default_factory=list)
    first_success: Optional[int] = None
    halted_reason: str = "t_max"

    @property
    def explored(self) -> int:
        return self.steps[-1].explored if self.steps else 0


def multi_root_process(
        g: Graph,
        p: float,
        r: int,
        M: int,
        T_max: int,
        rng: np.random.Generator,
        stop_on_success: bool = True
) -> MultiRootOutcome:
    """
    Repeatedly explores the ball of radius ``r`` around a uniform random root, excluding everything explored
    before. Step ``t`` succeeds if its ball holds more than ``M`` vertices. A root that was already explored gives
    an empty ball. All balls share one coin ledger.

    :param stop_on_success: Stop at the first success. Otherwise the process runs until ``T_max`` or exhaustion.
    """
    if r < 1 or T_max < 1 or M < 0:
        raise InvalidParameterError(f"Need r >= 1, T_max >= 1 and M >= 0, got r={r}, T_max={T_max}, M={M}")

    ledger = CoinLedger(p, rng)
    explored: Set[int] = set()
    outcome = MultiRootOutcome()
    for t in range(1, T_max + 1):
        if len(explored) == g.n:
            outcome.halted_reason = "exhausted"
            break

        root = int(rng.integers(g.n))
        size = 0
        if root not in explored:
            result = ball(g, root, r, ledger, explored)
            size = result.size
            explored.update(result.height)

        success = size > M
        outcome.steps.append(StepRecord(t=t, root=root, ball_size=size, success=success, explored=len(explored)))
        if success and outcome.first_success is None:
            outcome.first_success = t
            if stop_on_success:
                outcome.halted_reason = "success"
                break

    log(f"Multi-root process: {len(outcome.steps)} steps, {len(explored)} vertices, {outcome.halted_reason}")
    return outcome
