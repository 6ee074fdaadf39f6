from functools import cached_property

import numpy as np
from scipy import sparse

from mfperc.annotations import StructureError
from mfperc.graph import Graph

__all__ = [
    "DirectedEdgeSpace",
    "build_edge_space"
]


class DirectedEdgeSpace:
    """
    The state space of the non-backtracking walk: the 2|E| directed edges of a graph.

    Directed edges are ordered by (tail, head). The out-edges of ``x`` therefore occupy the index range
    ``offsets[x]:offsets[x + 1]`` in the order of ``g.neighbors(x)``.
    """

    def __init__(self, g: Graph):
        """
        :exception StructureError: Raised if a vertex has degree below 2.
        """
        if g.min_degree < 2:
            raise StructureError("The non-backtracking walk needs minimum degree 2")

        self.graph = g
        degrees = g.degrees
        self.offsets = np.concatenate([[0], np.cumsum(degrees)]).astype(np.int64)
        self.tails = np.repeat(np.arange(g.n, dtype=np.int64), degrees)
        self.heads = np.fromiter((u for row in g.adjacency for u in row), dtype=np.int64, count=int(self.offsets[-1]))

        keys = self.tails * g.n + self.heads
        self.reverse = np.searchsorted(keys, self.heads * g.n + self.tails)

    @property
    def size(self) -> int:
        return len(self.heads)

    def out_edges(self, x: int) -> np.ndarray:
        return np.arange(self.offsets[x], self.offsets[x + 1])

    def in_edges(self, x: int) -> np.ndarray:
        return self.reverse[self.offsets[x]:self.offsets[x + 1]]

    def index(self, x: int, y: int) -> int:
        """
        :exception KeyError: Raised if ``(x, y)`` is not a directed edge.
        """
        row = self.heads[self.offsets[x]:self.offsets[x + 1]]
        position = int(np.searchsorted(row, y))
        if position >= len(row) or row[position] != y:
            raise KeyError((x, y))
        return int(self.offsets[x]) + position

    @cached_property
    def transition(self) -> sparse.csr_matrix:
        """
        The transition matrix ``P`` with ``P[(x, y), (y, z)] = 1 / (deg(y) - 1)`` for ``z != x``.
        Row ``e`` lists the successors of ``e``.
        """
        counts = self.graph.degrees[self.heads]
        starts = self.offsets[self.heads]
        rows = np.repeat(np.arange(self.size), counts)
        within = np.arange(rows.size) - np.repeat(np.cumsum(counts) - counts, counts)
        cols = np.repeat(starts, counts) + within
        weights = np.repeat(1.0 / (counts - 1), counts)

        keep = cols != self.reverse[rows]
        return sparse.csr_matrix((weights[keep], (rows[keep], cols[keep])), shape=(self.size, self.size))

    @cached_property
    def forward(self) -> sparse.csr_matrix:
        "``P`` transposed: multiplying a distribution column by it advances the walk one step."
        return self.transition.T.tocsr()

    def successors(self, e: int) -> np.ndarray:
        p = self.transition
        return p.indices[p.indptr[e]:p.indptr[e + 1]]

    @cached_property
    def head_incidence(self) -> sparse.csr_matrix:
        "The ``n x 2|E|`` matrix mapping an edge distribution to the distribution of its head vertex."
        return sparse.csr_matrix(
            (np.ones(self.size), (self.heads, np.arange(self.size))),
            shape=(self.graph.n, self.size)
        )


def build_edge_space(g: Graph) -> DirectedEdgeSpace:
    "Indexes the directed edges of ``g``. Raises ``StructureError`` below minimum degree 2."
    return DirectedEdgeSpace(g)
