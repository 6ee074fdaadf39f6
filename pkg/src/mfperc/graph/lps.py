"""
The Lubotzky-Phillips-Sarnak Ramanujan graphs X^{p,q}.

The generators are the p + 1 integer quaternions ``a + bi + cj + dk`` of norm p with ``a`` odd and positive and
``b, c, d`` even. Each one becomes a 2x2 matrix over GF(q) using a square root of -1 modulo q. The graph is the Cayley
graph of the subgroup these matrices generate inside PGL(2, q): PSL(2, q) if p is a square modulo q, PGL(2, q)
otherwise. In the second case the graph is bipartite.
"""

from collections import deque
from math import isqrt
from typing import List, Tuple, Dict

from mfperc.annotations import InvalidParameterError, CapacityError
from mfperc.config import DEFAULTS
from mfperc.graph.core import Graph
from mfperc.util import log

__all__ = [
    "lps_ramanujan_graph",
    "lps_vertex_count",
    "is_prime",
    "legendre_symbol"
]

_Matrix = Tuple[int, int, int, int]


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    return all(x % f for f in range(3, isqrt(x) + 1, 2))


def legendre_symbol(a: int, q: int) -> int:
    "The Legendre symbol (a / q) for an odd prime q, as -1, 0 or 1."
    value = pow(a, (q - 1) // 2, q)
    return -1 if value == q - 1 else value


def lps_vertex_count(p: int, q: int) -> int:
    order = q * (q * q - 1)
    return order // 2 if legendre_symbol(p, q) == 1 else order


def _check_parameters(p: int, q: int) -> None:
    for name, x in (("p", p), ("q", q)):
        if not is_prime(x):
            raise InvalidParameterError(f"{name}={x} is not a prime")
        if x % 4 != 1:
            raise InvalidParameterError(f"{name}={x} is not congruent to 1 mod 4")
    if p == q:
        raise InvalidParameterError(f"p and q must be distinct, got {p}")
    if q * q <= 4 * p:
        raise InvalidParameterError(f"q must exceed 2*sqrt(p), got p={p}, q={q}")


def _quaternion_generators(p: int) -> List[Tuple[int, int, int, int]]:
    bound = isqrt(p)
    result = []
    for a in range(1, bound + 1, 2):
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                rest = p - a * a - b * b - c * c
                if rest < 0 or b % 2 or c % 2:
                    continue
                d = isqrt(rest)
                if d * d != rest or d % 2:
                    continue
                result.append((a, b, c, d))
                if d:
                    result.append((a, b, c, -d))
    return result


def _sqrt_minus_one(q: int) -> int:
    for i in range(2, q):
        if (i * i) % q == q - 1:
            return i
    raise InvalidParameterError(f"-1 has no square root modulo {q}")


def _canonical(m: _Matrix, q: int) -> _Matrix:
    # Scale the projective class so that its first nonzero entry is 1
    lead = next(x for x in m if x)
    inverse = pow(lead, q - 2, q)
    return tuple((x * inverse) % q for x in m)


def _multiply(x: _Matrix, y: _Matrix, q: int) -> _Matrix:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g) % q, (a * f + b * h) % q, (c * e + d * g) % q, (c * f + d * h) % q


def lps_ramanujan_graph(p: int, q: int) -> Graph:
    """
    Builds the LPS Ramanujan graph X^{p,q} by a breadth-first search from the identity matrix.
    Vertex ids are assigned in discovery order, the identity gets id 0.

    :param p: The prime giving the degree ``p + 1``.
    :param q: The prime of the underlying field.
    :return: A ``(p + 1)``-regular vertex-transitive graph on ``q(q^2-1)/2`` or ``q(q^2-1)`` vertices.
    :exception InvalidParameterError: Raised if p or q is not a prime congruent to 1 mod 4, if they are equal or if
        ``q <= 2 * sqrt(p)``.
    """
    _check_parameters(p, q)
    n = lps_vertex_count(p, q)
    if n > DEFAULTS["max_vertices"]:
        raise CapacityError(f"X^({p},{q}) has {n} vertices, exceeding the cap of {DEFAULTS['max_vertices']}")

    i = _sqrt_minus_one(q)
    generators = [
        _canonical(((a + b * i) % q, (c + d * i) % q, (-c + d * i) % q, (a - b * i) % q), q)
        for a, b, c, d in _quaternion_generators(p)
    ]
    if len(generators) != p + 1:
        raise InvalidParameterError(f"Expected {p + 1} quaternion generators of norm {p}, found {len(generators)}")

    identity = (1, 0, 0, 1)
    ids: Dict[_Matrix, int] = {identity: 0}
    adjacency: List[List[int]] = [[]]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        row = adjacency[ids[x]]
        for s in generators:
            y = _canonical(_multiply(x, s, q), q)
            if y not in ids:
                ids[y] = len(adjacency)
                adjacency.append([])
                queue.append(y)
            row.append(ids[y])

    if len(adjacency) != n:
        raise InvalidParameterError(f"Generated group has {len(adjacency)} elements instead of {n}")

    log(f"X^({p},{q}): {n} vertices, {'PSL' if legendre_symbol(p, q) == 1 else 'PGL'} case")
    return Graph(n, [sorted(row) for row in adjacency], family_tag="lps")
