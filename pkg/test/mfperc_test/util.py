"""
Small graphs and brute-force oracles shared by the tests.
"""

import itertools
import math
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from mfperc.graph import Graph, from_edges


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner, transitive=True)


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], transitive=True)


def k33_graph() -> Graph:
    return from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)], transitive=True)


def brute_force_girth(g: Graph) -> float:
    "The shortest cycle by removing every edge and measuring the distance between its endpoints."
    best = math.inf
    for u, v in g.edges:
        dist = {u: 0}
        frontier = [u]
        while frontier and v not in dist:
            following = []
            for x in frontier:
                for y in g.neighbors(x):
                    if (x, y) in ((u, v), (v, u)) or y in dist:
                        continue
                    dist[y] = dist[x] + 1
                    following.append(y)
            frontier = following
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def nb_return_probability(g: Graph, v: int, s: int) -> Fraction:
    "The exact return probability after ``s`` steps by enumerating every non-backtracking path from ``v``."
    total = Fraction(0)
    stack: List[Tuple[int, int, int, Fraction]] = [(v, -1, 0, Fraction(1))]
    while stack:
        x, previous, steps, weight = stack.pop()
        if steps == s:
            if x == v:
                total += weight
            continue
        options = [y for y in g.neighbors(x) if y != previous]
        for y in options:
            stack.append((y, x, steps + 1, weight / len(options)))
    return total


def tree_level_distribution(d: int, p: float, r: int) -> np.ndarray:
    "The exact law of the level-r occupation of tree percolation, by convolving binomial offspring laws."
    def binomial(k: int) -> np.ndarray:
        return np.array([math.comb(k, i) * p ** i * (1 - p) ** (k - i) for i in range(k + 1)])

    law = np.array([0.0, 1.0])
    for level in range(1, r + 1):
        children = d if level == 1 else d - 1
        offspring = binomial(children)
        following = np.zeros((len(law) - 1) * children + 1)
        power = np.array([1.0])
        for count, weight in enumerate(law):
            if count > 0:
                power = np.convolve(power, offspring)
            following[:len(power)] += weight * power
        law = following
    return law


def enumerate_ball(g: Graph, v: int, r: int, open_edges: set) -> List[int]:
    "Shell sizes of the open ball around ``v`` given the set of open edges ``(min, max)``."
    dist = {v: 0}
    frontier = [v]
    shells = [1]
    for _ in range(r):
        following = []
        for x in frontier:
            for y in g.neighbors(x):
                if y not in dist and (min(x, y), max(x, y)) in open_edges:
                    dist[y] = dist[x] + 1
                    following.append(y)
        shells.append(len(following))
        frontier = following
    return shells


def all_open_subsets(g: Graph):
    for bits in itertools.product((False, True), repeat=g.num_edges):
        yield {tuple(int(x) for x in edge) for edge, bit in zip(g.edges, bits) if bit}
