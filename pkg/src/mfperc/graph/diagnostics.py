import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy import sparse

from mfperc.annotations import StructureError, CapacityError
from mfperc.config import DEFAULTS
from mfperc.graph.core import Graph
from mfperc.util import log

__all__ = [
    "GraphDiagnostics",
    "girth",
    "is_bipartite",
    "is_connected",
    "spectral_expansion",
    "diagnose",
    "adjacency_matrix"
]


@dataclass(frozen=True)
class GraphDiagnostics:
    girth: Union[int, float]
    is_regular: bool
    degree: Optional[int]
    lambda_star: Optional[float]
    is_bipartite: bool


def girth(g: Graph) -> Union[int, float]:
    """
    Computes the length of the shortest cycle with one breadth-first search per vertex.
    A search stops as soon as it can no longer find a cycle shorter than the best one known.
    Vertex-transitive graphs need a single search from vertex 0.

    :return: The girth, ``math.inf`` for forests.
    """
    if g.is_implicit:
        return 3 if g.n >= 3 else math.inf

    best: Union[int, float] = math.inf
    roots = [0] if g.transitive else range(g.n)
    for root in roots:
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if 2 * dx + 1 >= best:
                break
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dx + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    best = min(best, dx + dist[y] + 1)
    return best


def _two_colouring(g: Graph) -> Optional[np.ndarray]:
    colour = np.full(g.n, -1, dtype=np.int8)
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    return colour


def is_bipartite(g: Graph) -> bool:
    if g.is_implicit:
        return g.n <= 2
    return _two_colouring(g) is not None


def is_connected(g: Graph) -> bool:
    if g.is_implicit:
        return True
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if not seen[y]:
                seen[y] = True
                queue.append(y)
    return bool(seen.all())


def adjacency_matrix(g: Graph) -> sparse.csr_matrix:
    "The symmetric 0/1 adjacency matrix as a scipy CSR matrix."
    edges = g.edges
    rows = np.concatenate([edges[:, 0], edges[:, 1]])
    cols = np.concatenate([edges[:, 1], edges[:, 0]])
    data = np.ones(rows.size, dtype=np.float64)
    return sparse.csr_matrix((data, (rows, cols)), shape=(g.n, g.n))


def spectral_expansion(g: Graph, tol: Optional[float] = None, seed: int = 0) -> float:
    """
    Computes the largest absolute eigenvalue of the simple random walk matrix that is not +-1.

    The walk matrix ``D^-1 A`` is similar to the symmetric ``M = D^-1/2 A D^-1/2``. Power iteration on ``M^2`` runs
    orthogonal to the eigenvector ``sqrt(deg)`` of the eigenvalue 1 and, for bipartite graphs, to its signed copy
    of the eigenvalue -1.

    :param g: A connected graph.
    :param tol: Stop once the Rayleigh quotient of ``M^2`` changes by less than this. Defaults to ``spectral_tol``.
    :param seed: Seed of the random start vector.
    :return: lambda_star in ``[0, 1)``. Graphs whose spectrum is exactly ``{1, -1}`` (K_2) give 0.
    :exception StructureError: Raised for disconnected graphs.
    """
    tol = DEFAULTS["spectral_tol"] if tol is None else tol

    if g.is_implicit:
        # Nontrivial eigenvalues of K_n are all -1/(n-1)
        return 1.0 / (g.n - 1) if g.n > 2 else 0.0
    if not is_connected(g):
        raise StructureError("lambda_star is undefined for a disconnected graph")

    degrees = g.degrees.astype(np.float64)
    if np.any(degrees == 0):
        return 0.0
    scale = sparse.diags(1.0 / np.sqrt(degrees))
    m = (scale @ adjacency_matrix(g) @ scale).tocsr()

    deflate = [np.sqrt(degrees) / np.linalg.norm(np.sqrt(degrees))]
    colouring = _two_colouring(g)
    if colouring is not None:
        signed = deflate[0] * (1.0 - 2.0 * colouring)
        deflate.append(signed / np.linalg.norm(signed))

    def project(x: np.ndarray) -> np.ndarray:
        for phi in deflate:
            x = x - (phi @ x) * phi
        return x

    rng = np.random.default_rng(seed)
    x = project(rng.standard_normal(g.n))
    norm = np.linalg.norm(x)
    if norm < 1e-12:
        return 0.0
    x /= norm

    previous = -1.0
    quotient = 0.0
    for iteration in range(DEFAULTS["spectral_max_iter"]):
        y = project(m @ (m @ x))
        quotient = float(x @ y)
        norm = np.linalg.norm(y)
        if norm < 1e-14:
            return 0.0
        x = y / norm
        if abs(quotient - previous) < tol:
            log(f"Power iteration converged after {iteration + 1} steps")
            break
        previous = quotient
    else:
        log(f"Power iteration stopped at the cap of {DEFAULTS['spectral_max_iter']} steps")

    return math.sqrt(max(quotient, 0.0))


def diagnose(g: Graph, spectral: bool = True) -> GraphDiagnostics:
    """
    Collects the structural diagnostics of a graph.

    :param spectral: Whether to compute lambda_star. It is ``None`` if skipped or if the graph is disconnected.
    """
    lambda_star = None
    if spectral:
        try:
            lambda_star = spectral_expansion(g)
        except (StructureError, CapacityError) as e:
            log("No lambda_star:", e)

    return GraphDiagnostics(
        girth=girth(g),
        is_regular=g.degree is not None,
        degree=g.degree,
        lambda_star=lambda_star,
        is_bipartite=is_bipartite(g)
    )
