from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from mfperc.graph import Graph
from mfperc.percolation.sampling import EdgeMask

__all__ = [
    "ComponentStats",
    "open_subgraph",
    "component_stats",
    "cluster_of"
]


@dataclass(frozen=True)
class ComponentStats:
    """
    The open clusters of a percolation configuration.
    ``sizes`` is sorted in descending order, ``labels[v]`` names the cluster of ``v`` and ``c1_label`` the largest one.
    """
    sizes: np.ndarray
    labels: np.ndarray
    c1_label: int
    diameter: Optional[int] = None
    mixing_time: Optional[int] = None

    @property
    def c1_size(self) -> int:
        return int(self.sizes[0])

    @property
    def c1_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.labels == self.c1_label)

    @property
    def count(self) -> int:
        return len(self.sizes)


def open_subgraph(n: int, mask: EdgeMask) -> sparse.csr_matrix:
    "The symmetric adjacency matrix of the open edges."
    edges = mask.open_edges
    rows = np.concatenate([edges[:, 0], edges[:, 1]])
    cols = np.concatenate([edges[:, 1], edges[:, 0]])
    return sparse.csr_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(n, n))


def component_stats(g: Graph, mask: EdgeMask) -> ComponentStats:
    """
    Decomposes the open subgraph into its connected components.
    Ties for the largest component go to the one containing the smallest vertex.
    """
    count, labels = csgraph.connected_components(open_subgraph(g.n, mask), directed=False)
    counts = np.bincount(labels, minlength=count)
    return ComponentStats(
        sizes=np.sort(counts)[::-1],
        labels=labels,
        c1_label=int(np.argmax(counts))
    )


def cluster_of(g: Graph, mask: EdgeMask, v: int) -> np.ndarray:
    "The sorted vertices of the open cluster containing ``v``."
    order = csgraph.breadth_first_order(open_subgraph(g.n, mask), v, directed=False, return_predecessors=False)
    return np.sort(order)
