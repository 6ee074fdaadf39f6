import numpy as np

from mfperc.annotations import InvalidParameterError, CapacityError, SamplingFailure
from mfperc.config import DEFAULTS
from mfperc.graph.core import Graph, from_edges
from mfperc.util import log, derive_seed

__all__ = [
    "complete_graph",
    "hamming_graph",
    "random_regular_graph"
]


def complete_graph(n: int) -> Graph:
    """
    Creates the complete graph K_n.

    Graphs with more than ``implicit_complete_edges`` edges are returned implicit,
    i.e. without a materialized adjacency.

    :param n: The number of vertices.
    :exception InvalidParameterError: Raised if ``n < 2``.
    :exception CapacityError: Raised if ``n`` exceeds ``max_vertices``.
    """
    if n < 2:
        raise InvalidParameterError(f"A complete graph needs at least 2 vertices, got n={n}")
    if n > DEFAULTS["max_vertices"]:
        raise CapacityError(f"K_{n} exceeds the vertex cap of {DEFAULTS['max_vertices']}")

    if n * (n - 1) // 2 > DEFAULTS["implicit_complete_edges"]:
        log(f"K_{n} is kept implicit")
        return Graph(n, None, family_tag="complete")

    adjacency = [[u for u in range(n) if u != v] for v in range(n)]
    return Graph(n, adjacency, family_tag="complete", validate=False)


def hamming_graph(k: int, m: int) -> Graph:
    """
    Creates the Hamming graph H(k, m) on ``{0..m-1}^k``. Two tuples are adjacent iff they differ in exactly one
    coordinate. A tuple ``(x_0, ..., x_{k-1})`` gets the id ``sum(x_i * m**i)``.

    :param k: The dimension.
    :param m: The alphabet size.
    :exception InvalidParameterError: Raised if ``k < 1`` or ``m < 2``.
    :exception CapacityError: Raised if ``m**k`` exceeds ``max_vertices``.
    """
    if k < 1 or m < 2:
        raise InvalidParameterError(f"H(k, m) needs k >= 1 and m >= 2, got k={k}, m={m}")
    n = m ** k
    if n > DEFAULTS["max_vertices"]:
        raise CapacityError(f"H({k}, {m}) has {n} vertices, exceeding the cap of {DEFAULTS['max_vertices']}")

    ids = np.arange(n, dtype=np.int64)
    columns = []
    for i in range(k):
        weight = m ** i
        digit = (ids // weight) % m
        for shift in range(1, m):
            columns.append(ids + ((digit + shift) % m - digit) * weight)
    neighbours = np.sort(np.column_stack(columns), axis=1)
    return Graph(n, neighbours.tolist(), family_tag="hamming", validate=False)


def random_regular_graph(n: int, d: int, seed: int) -> Graph:
    """
    Samples a simple d-regular graph with the configuration model.
    Pairings containing a loop or a parallel edge are discarded as a whole and the pairing is redrawn from a new
    stream derived from ``seed`` and the attempt number.

    :param n: The number of vertices.
    :param d: The degree.
    :param seed: The seed. Equal seeds give equal graphs.
    :exception InvalidParameterError: Raised if ``n * d`` is odd or ``d >= n``.
    :exception SamplingFailure: Raised if ``regular_max_attempts`` pairings were all rejected.
    """
    if d < 0 or d >= n:
        raise InvalidParameterError(f"A {d}-regular graph on {n} vertices needs 0 <= d < n")
    if (n * d) % 2:
        raise InvalidParameterError(f"n * d must be even, got n={n}, d={d}")
    if n > DEFAULTS["max_vertices"]:
        raise CapacityError(f"{n} vertices exceed the cap of {DEFAULTS['max_vertices']}")

    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    attempts = DEFAULTS["regular_max_attempts"]
    for attempt in range(attempts):
        rng = np.random.default_rng(derive_seed(seed, [attempt]))
        pairs = rng.permutation(stubs).reshape(-1, 2)
        lo = pairs.min(axis=1)
        hi = pairs.max(axis=1)
        if np.any(lo == hi):
            continue
        keys = lo * n + hi
        if np.unique(keys).size != keys.size:
            continue

        log(f"Configuration model accepted attempt {attempt + 1} for n={n}, d={d}")
        return from_edges(n, np.column_stack([lo, hi]), family_tag="random_regular", transitive=False)

    raise SamplingFailure(f"No simple {d}-regular pairing on {n} vertices within {attempts} attempts")
