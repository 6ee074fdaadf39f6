import argparse
import csv
from typing import Optional

import numpy as np

from mfperc.cli._inputs import add_graph_arguments, add_output_argument, input_graph, open_output
from mfperc.cli._parser import subcommands
from mfperc.nbrw import build_edge_space, return_probabilities, sample_return_frequency
from mfperc.util import log

__all__ = [
    "mfperc_nbrw"
]


def mfperc_nbrw(
        graph: Optional[str],
        transitive: bool,
        family: Optional[str],
        params: str,
        seed: int,
        out: Optional[str],
        vertex: int,
        steps: int,
        samples: Optional[int]
) -> None:
    """
    Print the return probabilities of the non-backtracking walk.

    For argument documentation, see ``mfperc_nbrw_parser``.
    """
    g = input_graph(graph, transitive, family, params, seed)
    space = build_edge_space(g)

    with open_output(out) as stream:
        writer = csv.writer(stream, lineterminator="\n")
        if samples is None:
            profile = return_probabilities(g, vertex, steps, space)
            writer.writerow(["s", "R"])
            for s in range(1, steps + 1):
                writer.writerow([s, repr(float(profile[s]))])
            return

        rng = np.random.default_rng(seed)
        writer.writerow(["s", "R", "standard_error"])
        for s in range(1, steps + 1):
            frequency, error = sample_return_frequency(g, vertex, s, samples, rng, space)
            log(f"s={s}: {frequency} +- {error}")
            writer.writerow([s, repr(frequency), repr(error)])


mfperc_nbrw_parser = subcommands.add_parser(
    "nbrw",
    description=
    """\
  Compute the probabilities R[s] that the non-backtracking random walk started at a vertex is back at that vertex
  after s steps, for s = 1..STEPS.

  By default, the exact values are computed by evolving a distribution over the directed edges of the graph.
  With --samples, R[s] is estimated from the given number of simulated walks instead.\
    """,
    help="return probabilities of the non-backtracking walk",
    formatter_class=argparse.RawDescriptionHelpFormatter
)
add_graph_arguments(mfperc_nbrw_parser)
add_output_argument(mfperc_nbrw_parser)
mfperc_nbrw_parser.add_argument(
    "-x", "--vertex",
    help="the start vertex (default: 0)",
    action="store", type=int, default=0, dest="vertex"
)
mfperc_nbrw_parser.add_argument(
    "-n", "--steps",
    help="the largest number of steps",
    action="store", type=int, required=True, dest="steps"
)
mfperc_nbrw_parser_mode = mfperc_nbrw_parser.add_mutually_exclusive_group()
mfperc_nbrw_parser_mode.add_argument(
    "-e", "--exact",
    help="compute the exact values (default)",
    action="store_const", const=None, dest="samples"
)
mfperc_nbrw_parser_mode.add_argument(
    "-N", "--samples",
    help="estimate the values from this many walks",
    action="store", type=int, default=None, dest="samples"
)
mfperc_nbrw_parser.set_defaults(func=mfperc_nbrw)
