from dataclasses import dataclass

import numpy as np

from mfperc.coupling.covering_tree import LabelledTree

__all__ = [
    "PurityFlags",
    "classify_purity",
    "top_connected_depth"
]


@dataclass(frozen=True)
class PurityFlags:
    pure: np.ndarray
    path_pure: np.ndarray


def top_connected_depth(tree: LabelledTree, open_flags: np.ndarray) -> np.ndarray:
    """
    For every node, the depth of its highest ancestor it is connected to by open edges.
    ``open_flags[i]`` is the state of the edge between ``i`` and its parent; the root entry is ignored.
    """
    top = np.zeros(tree.size, dtype=np.int64)
    for i in range(1, tree.size):
        top[i] = top[tree.parent[i]] if open_flags[i] else tree.depth[i]
    return top


def classify_purity(tree: LabelledTree, open_flags: np.ndarray) -> PurityFlags:
    """
    Flags impure nodes. A node ``w`` is impure if another node ``u`` with ``|u| <= |w|`` and the same label is
    connected to the common ancestor of ``u`` and ``w``. Both nodes of an equal-depth pair can be impure.
    A node is path-pure if it and all its ancestors are pure.

    :param tree: The covering tree.
    :param open_flags: Per node, whether the edge to its parent is open.
    """
    top = top_connected_depth(tree, open_flags)
    ancestors = tree.ancestors()
    nodes = np.arange(tree.size)

    # u witnesses against w iff its highest connected ancestor is an ancestor of w, so u is keyed by that node
    keys = tree.label * tree.size + ancestors[nodes, top]
    order = np.lexsort((tree.depth, keys))
    sorted_keys = keys[order]
    starts = np.flatnonzero(np.r_[True, sorted_keys[1:] != sorted_keys[:-1]])
    unique_keys = sorted_keys[starts]
    first = order[starts]
    first_depth = tree.depth[first]
    has_second = np.r_[starts[1:], tree.size] - starts > 1
    second_depth = np.where(
        has_second,
        tree.depth[order[np.minimum(starts + 1, tree.size - 1)]],
        np.iinfo(np.int64).max
    )

    impure = np.zeros(tree.size, dtype=bool)
    for k in range(tree.depth_cap + 1):
        w = nodes[tree.depth >= k]
        wanted = tree.label[w] * tree.size + ancestors[w, k]
        slot = np.minimum(np.searchsorted(unique_keys, wanted), len(unique_keys) - 1)
        # The shallowest candidate other than w itself
        best = np.where(first[slot] == w, second_depth[slot], first_depth[slot])
        impure[w] |= (unique_keys[slot] == wanted) & (best <= tree.depth[w])

    pure = ~impure
    path_pure = pure.copy()
    for i in range(1, tree.size):
        path_pure[i] &= path_pure[tree.parent[i]]
    return PurityFlags(pure=pure, path_pure=path_pure)
