from bisect import bisect_left
from typing import List

import numpy as np

from mfperc.annotations import StructureError, CapacityError, InvalidParameterError
from mfperc.config import DEFAULTS
from mfperc.graph import Graph

__all__ = [
    "LabelledTree",
    "build_covering_tree",
    "covering_tree_size"
]


def covering_tree_size(d: int, depth: int) -> int:
    "Nodes of the d-regular tree up to ``depth``."
    return 1 + sum(d * (d - 1) ** (k - 1) for k in range(1, depth + 1))


class LabelledTree:
    """
    The covering tree of a regular graph rooted at ``v``, truncated at ``depth``.

    Nodes are numbered in breadth-first order, so parents precede children and the children of a node form the
    contiguous range ``child_start[i]:child_start[i] + child_count[i]``. The root is labelled ``v`` and its children
    the neighbours of ``v``. The children of any other node are labelled by the neighbours of its label except the
    label of its parent, in increasing order.
    """

    def __init__(self, g: Graph, v: int, depth: int):
        """
        :exception StructureError: Raised for irregular graphs or degree below 3.
        :exception CapacityError: Raised if the tree would exceed ``covering_tree_node_budget`` nodes.
        """
        if g.degree is None or g.degree < 3:
            raise StructureError("Covering trees need a regular graph of degree at least 3")
        if depth < 0:
            raise InvalidParameterError(f"Depth must be nonnegative, got {depth}")
        size = covering_tree_size(g.degree, depth)
        budget = DEFAULTS["covering_tree_node_budget"]
        if size > budget:
            raise CapacityError(f"Covering tree of depth {depth} has {size} nodes, exceeding the budget of {budget}")

        self.graph = g
        self.root_label = v
        self.depth_cap = depth

        parent: List[int] = [-1]
        depths: List[int] = [0]
        labels: List[int] = [v]
        child_start = np.zeros(size, dtype=np.int64)
        child_count = np.zeros(size, dtype=np.int64)
        for i in range(size):
            if depths[i] == depth:
                continue
            excluded = labels[parent[i]] if parent[i] >= 0 else -1
            child_start[i] = len(labels)
            for u in g.neighbors(labels[i]):
                if u != excluded:
                    parent.append(i)
                    depths.append(depths[i] + 1)
                    labels.append(u)
            child_count[i] = len(labels) - child_start[i]

        self.parent = np.asarray(parent, dtype=np.int64)
        self.depth = np.asarray(depths, dtype=np.int64)
        self.label = np.asarray(labels, dtype=np.int64)
        self.child_start = child_start
        self.child_count = child_count

    @property
    def size(self) -> int:
        return len(self.label)

    def children(self, i: int) -> np.ndarray:
        return np.arange(self.child_start[i], self.child_start[i] + self.child_count[i])

    def child(self, i: int, label: int) -> int:
        """
        :return: The child of node ``i`` carrying ``label``.
        :exception KeyError: Raised if there is none.
        """
        start, count = int(self.child_start[i]), int(self.child_count[i])
        labels = self.label[start:start + count]
        k = bisect_left(labels, label)
        if k == count or labels[k] != label:
            raise KeyError((i, label))
        return start + k

    def level(self, k: int) -> np.ndarray:
        return np.flatnonzero(self.depth == k)

    def ancestors(self) -> np.ndarray:
        """
        A ``size x (depth_cap + 1)`` matrix whose entry ``[i, k]`` is the ancestor of ``i`` at depth ``k``.
        Entries below the depth of ``i`` hold ``-1 - i``, so that distinct nodes never agree there.
        """
        result = np.empty((self.size, self.depth_cap + 1), dtype=np.int64)
        result[:] = -1 - np.arange(self.size)[:, None]
        result[0, 0] = 0
        for i in range(1, self.size):
            k = self.depth[i]
            result[i, :k] = result[self.parent[i], :k]
            result[i, k] = i
        return result


def build_covering_tree(g: Graph, v: int, depth: int) -> LabelledTree:
    return LabelledTree(g, v, depth)
