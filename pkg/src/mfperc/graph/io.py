import os
from typing import Union, Optional

import numpy as np

from mfperc.annotations import InvalidParameterError
from mfperc.graph.core import Graph, from_edges
from mfperc.util import absolute_path, ensure_parent_dir, log

__all__ = [
    "read_edge_list",
    "write_edge_list"
]


def read_edge_list(path: Union[str, os.PathLike], transitive: Optional[bool] = False) -> Graph:
    """
    Reads a graph from the edge-list text format: a header line ``n m`` followed by ``m`` lines ``u v`` with
    ``0 <= u < v < n``. Empty lines and lines starting with ``#`` are ignored.

    :param path: The file to read.
    :param transitive: Whether the caller knows the graph to be vertex-transitive.
    :exception InvalidParameterError: Raised for malformed lines or a wrong edge count.
    :exception StructureError: Raised if the edges do not form a simple graph.
    """
    path = absolute_path(path)
    with open(path, "r") as f:
        lines = [line.split() for line in f if line.strip() and not line.lstrip().startswith("#")]

    if not lines or len(lines[0]) != 2:
        raise InvalidParameterError(f"Missing 'n m' header in {path}")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(u), int(v)) for u, v in lines[1:]]
    except ValueError:
        raise InvalidParameterError(f"Non-integer or malformed line in {path}")

    if len(edges) != m:
        raise InvalidParameterError(f"Header of {path} announces {m} edges, found {len(edges)}")
    for u, v in edges:
        if not 0 <= u < v < n:
            raise InvalidParameterError(f"Edge '{u} {v}' in {path} violates 0 <= u < v < n")

    log(f"Read {n} vertices and {m} edges from {path}")
    return from_edges(n, np.array(edges, dtype=np.int64).reshape(-1, 2), transitive=transitive)


def write_edge_list(g: Graph, path: Union[str, os.PathLike]) -> None:
    """
    Writes a graph in the edge-list text format. Edges are written in edge id order.
    """
    path = ensure_parent_dir(path)
    edges = g.edges
    with open(path, "w") as f:
        f.write(f"{g.n} {len(edges)}\n")
        for u, v in edges:
            f.write(f"{u} {v}\n")
    log(f"Wrote {len(edges)} edges to {path}")
