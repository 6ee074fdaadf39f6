from functools import cached_property
from itertools import chain
from typing import Optional, Sequence, Tuple, Dict, Union

import numpy as np

from mfperc.annotations import StructureError, CapacityError, InvalidParameterError

__all__ = [
    "Graph",
    "from_edges",
    "FAMILY_TAGS",
    "TRANSITIVE_FAMILIES"
]

FAMILY_TAGS = ("complete", "hamming", "lps", "random_regular", "custom")
"Provenance labels a graph can carry."

TRANSITIVE_FAMILIES = ("complete", "hamming", "lps")
"Families that are vertex-transitive by construction."


class Graph:
    """
    An immutable simple undirected graph on the vertices ``0..n-1``.

    Graphs are either explicit (sorted adjacency tuples) or implicit complete graphs, whose neighbourhoods are
    generated on demand. Implicit graphs exist so that percolation on K_n is feasible for very large n;
    they have no materialized edge array.
    """

    def __init__(
            self,
            n: int,
            adjacency: Optional[Sequence[Sequence[int]]],
            family_tag: str = "custom",
            transitive: Optional[bool] = None,
            validate: bool = True
    ):
        """
        :param n: The number of vertices.
        :param adjacency: For every vertex, the sorted neighbour ids. ``None`` creates the implicit complete graph.
        :param family_tag: One of ``FAMILY_TAGS``.
        :param transitive: Whether the graph is vertex-transitive. Defaults to the family's transitivity.
        :param validate: Check symmetry, loops and parallel edges.
        :exception StructureError: Raised if validation fails.
        """
        if family_tag not in FAMILY_TAGS:
            raise InvalidParameterError(f"Unknown family tag: {family_tag}")
        if n < 1:
            raise InvalidParameterError(f"A graph needs at least one vertex, got n={n}")

        self._n = int(n)
        self._family_tag = family_tag
        self._transitive = (family_tag in TRANSITIVE_FAMILIES) if transitive is None else bool(transitive)

        if adjacency is None:
            self._adjacency = None
            self._degree = self._n - 1
            return

        if len(adjacency) != n:
            raise StructureError(f"Adjacency has {len(adjacency)} rows for {n} vertices")
        self._adjacency: Optional[Tuple[Tuple[int, ...], ...]] = tuple(tuple(int(u) for u in row) for row in adjacency)

        if validate:
            self._validate()

        degrees = {len(row) for row in self._adjacency}
        self._degree = degrees.pop() if len(degrees) == 1 else None

    def _validate(self) -> None:
        for v, row in enumerate(self._adjacency):
            for i, u in enumerate(row):
                if u == v:
                    raise StructureError(f"Self-loop at vertex {v}")
                if not 0 <= u < self._n:
                    raise StructureError(f"Vertex {v} has out-of-range neighbour {u}")
                if i > 0 and row[i - 1] >= u:
                    raise StructureError(f"Neighbours of {v} are not strictly increasing (parallel edge or unsorted)")
        for v, row in enumerate(self._adjacency):
            for u in row:
                if not _contains_sorted(self._adjacency[u], v):
                    raise StructureError(f"Adjacency is not symmetric: {u} in adj({v}) but not vice versa")

    @property
    def n(self) -> int:
        return self._n

    @property
    def degree(self) -> Optional[int]:
        "The common degree if the graph is regular, ``None`` otherwise."
        return self._degree

    @property
    def family_tag(self) -> str:
        return self._family_tag

    @property
    def transitive(self) -> bool:
        return self._transitive

    @property
    def is_implicit(self) -> bool:
        return self._adjacency is None

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """
        :exception CapacityError: Raised for implicit graphs.
        """
        if self._adjacency is None:
            raise CapacityError(f"Adjacency of the implicit complete graph on {self._n} vertices is not materialized")
        return self._adjacency

    def neighbors(self, v: int) -> Sequence[int]:
        if self._adjacency is None:
            return list(chain(range(v), range(v + 1, self._n)))
        return self._adjacency[v]

    def deg(self, v: int) -> int:
        if self._adjacency is None:
            return self._n - 1
        return len(self._adjacency[v])

    @cached_property
    def degrees(self) -> np.ndarray:
        if self._adjacency is None:
            return np.full(self._n, self._n - 1, dtype=np.int64)
        return np.fromiter((len(row) for row in self._adjacency), dtype=np.int64, count=self._n)

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min())

    @cached_property
    def num_edges(self) -> int:
        if self._adjacency is None:
            return self._n * (self._n - 1) // 2
        return int(self.degrees.sum()) // 2

    @cached_property
    def edges(self) -> np.ndarray:
        """
        All edges ``(u, v)`` with ``u < v`` as an ``(m, 2)`` array, sorted lexicographically.
        The row index of an edge is its edge id.
        """
        adjacency = self.adjacency
        rows = [(u, v) for u, row in enumerate(adjacency) for v in row if v > u]
        return np.array(rows, dtype=np.int64).reshape(-1, 2)

    @cached_property
    def _edge_ids(self) -> Dict[Tuple[int, int], int]:
        return {(int(u), int(v)): i for i, (u, v) in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        """
        :return: The row of edge ``{u, v}`` in ``edges``.
        :exception KeyError: Raised if ``u`` and ``v`` are not adjacent.
        """
        if u > v:
            u, v = v, u
        return self._edge_ids[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        if self._adjacency is None:
            return u != v
        return _contains_sorted(self._adjacency[u], v)

    def __repr__(self) -> str:
        regular = f"{self._degree}-regular" if self._degree is not None else "irregular"
        return f"Graph(n={self._n}, {regular}, family={self._family_tag}, transitive={self._transitive})"


def _contains_sorted(row: Sequence[int], x: int) -> bool:
    lo, hi = 0, len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < len(row) and row[lo] == x


def from_edges(
        n: int,
        edges: Union[np.ndarray, Sequence[Tuple[int, int]]],
        family_tag: str = "custom",
        transitive: Optional[bool] = None
) -> Graph:
    """
    Builds a graph from an edge list.

    :param n: The number of vertices.
    :param edges: Pairs ``(u, v)``. Orientation does not matter.
    :param family_tag: The provenance label.
    :param transitive: See ``Graph``.
    :exception StructureError: Raised on self-loops or parallel edges.
    """
    pairs = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if pairs.size and (pairs.min() < 0 or pairs.max() >= n):
        raise StructureError(f"Edge endpoint out of range for n={n}")
    if np.any(pairs[:, 0] == pairs[:, 1]):
        raise StructureError("Edge list contains a self-loop")

    lo = pairs.min(axis=1)
    hi = pairs.max(axis=1)
    keys = lo * n + hi
    if np.unique(keys).size != keys.size:
        raise StructureError("Edge list contains parallel edges")

    tails = np.concatenate([lo, hi])
    heads = np.concatenate([hi, lo])
    order = np.lexsort((heads, tails))
    tails, heads = tails[order], heads[order]
    bounds = np.searchsorted(tails, np.arange(n + 1))
    adjacency = [heads[bounds[v]:bounds[v + 1]].tolist() for v in range(n)]
    return Graph(n, adjacency, family_tag=family_tag, transitive=transitive, validate=False)
