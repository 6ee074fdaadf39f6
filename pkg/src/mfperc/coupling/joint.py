from dataclasses import dataclass
from typing import Dict, Tuple, Collection, Optional

import numpy as np

from mfperc.annotations import InvalidParameterError
from mfperc.coupling.covering_tree import LabelledTree
from mfperc.coupling.purity import classify_purity
from mfperc.graph import Graph
from mfperc.percolation import BallResult, ball

__all__ = [
    "TreeSample",
    "JointSample",
    "joint_sample",
    "check_coupling_inequality"
]


@dataclass(frozen=True)
class TreeSample:
    """
    A percolation sample on a covering tree. ``H[k]`` counts the depth-k nodes connected to the root and ``X[k]``
    those among them that are also path-pure and A-free.
    """
    tree: LabelledTree
    open_flags: np.ndarray
    pure: np.ndarray
    path_pure: np.ndarray
    a_free: np.ndarray
    connected: np.ndarray
    H: np.ndarray
    X: np.ndarray


@dataclass(frozen=True)
class JointSample:
    """
    A tree sample and a graph exploration sharing their coins. ``ledger`` maps every revealed graph edge
    ``(u, w)``, in the direction it was explored, to the tree node below the corresponding tree edge.
    """
    tree_sample: TreeSample
    exploration: BallResult
    ledger: Dict[Tuple[int, int], int]

    @property
    def radius(self) -> int:
        return self.exploration.radius

    def shell_sizes(self) -> np.ndarray:
        return np.array([self.exploration.boundary(k) for k in range(self.radius + 1)], dtype=np.int64)


class _TreeCoins:
    # Answers graph coin requests with the flag of the matching tree edge

    def __init__(self, tree: LabelledTree, open_flags: np.ndarray):
        self.tree = tree
        self.open_flags = open_flags
        self.node_of = {tree.root_label: 0}
        self.ledger: Dict[Tuple[int, int], int] = {}

    def is_open(self, u: int, w: int) -> bool:
        node = self.tree.child(self.node_of[u], w)
        self.ledger[(u, w)] = node
        if self.open_flags[node]:
            self.node_of[w] = node
            return True
        return False


def _level_counts(tree: LabelledTree, mask: np.ndarray, r: int) -> np.ndarray:
    return np.bincount(tree.depth[mask], minlength=r + 1)[:r + 1]


def joint_sample(
        g: Graph,
        v: int,
        p: float,
        r: int,
        A: Collection[int],
        rng: np.random.Generator,
        tree: Optional[LabelledTree] = None
) -> JointSample:
    """
    Samples percolation on the covering tree rooted at ``v`` and explores the ball of radius ``r`` around ``v`` in
    ``G - A`` so that every revealed graph edge is open exactly when its tree edge is. The tree edges no graph edge
    is mapped to keep their independent coins.

    :param tree: A covering tree of ``g`` rooted at ``v`` reaching depth ``r``, reused across samples.
    :exception InvalidParameterError: Raised if ``v`` lies in ``A``.
    """
    A = set(A)
    if v in A:
        raise InvalidParameterError(f"The root {v} lies in the excluded set")
    if tree is None:
        tree = LabelledTree(g, v, r)
    elif tree.root_label != v or tree.depth_cap < r:
        raise InvalidParameterError(f"The covering tree does not reach depth {r} from {v}")

    open_flags = rng.random(tree.size) < p
    open_flags[0] = True
    coins = _TreeCoins(tree, open_flags)
    exploration = ball(g, v, r, coins, A)

    flags = classify_purity(tree, open_flags)
    a_free = ~np.isin(tree.label, list(A)) if A else np.ones(tree.size, dtype=bool)
    connected = open_flags.copy()
    for i in range(1, tree.size):
        a_free[i] &= a_free[tree.parent[i]]
        connected[i] &= connected[tree.parent[i]]

    within = tree.depth <= r
    tree_sample = TreeSample(
        tree=tree,
        open_flags=open_flags,
        pure=flags.pure,
        path_pure=flags.path_pure,
        a_free=a_free,
        connected=connected,
        H=_level_counts(tree, connected & within, r),
        X=_level_counts(tree, connected & flags.path_pure & a_free & within, r)
    )
    return JointSample(tree_sample=tree_sample, exploration=exploration, ledger=coins.ledger)


def check_coupling_inequality(js: JointSample) -> bool:
    "Whether ``X[k] <= |shell k| <= H[k]`` on every level up to the radius."
    shells = js.shell_sizes()
    sample = js.tree_sample
    return bool(np.all(sample.X <= shells) and np.all(shells <= sample.H))
