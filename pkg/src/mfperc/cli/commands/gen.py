import argparse
import sys
from typing import Optional

from mfperc.cli._inputs import add_graph_arguments, input_graph, output_path
from mfperc.cli._parser import subcommands
from mfperc.graph import diagnose, write_edge_list
from mfperc.util import info

__all__ = [
    "mfperc_gen"
]


def mfperc_gen(
        graph: Optional[str],
        transitive: bool,
        family: Optional[str],
        params: str,
        seed: int,
        out: Optional[str],
        spectral: bool
) -> None:
    """
    Generate a graph and write it as an edge list.

    For argument documentation, see ``mfperc_gen_parser``.
    """
    g = input_graph(graph, transitive, family, params, seed)
    report = diagnose(g, spectral=spectral)
    info(f"n={g.n}, m={g.num_edges}, degree={report.degree}, girth={report.girth}, "
         f"bipartite={report.is_bipartite}, lambda_star={report.lambda_star}")

    if out is None:
        print(g.n, g.num_edges)
        for u, v in g.edges:
            print(u, v)
        sys.stdout.flush()
    else:
        write_edge_list(g, output_path(out))


mfperc_gen_parser = subcommands.add_parser(
    "gen",
    description=
    """\
  Build a member of a graph family and write it in the edge-list format.

  The complete, hamming and lps families are deterministic. Random regular graphs are drawn from the
  configuration model, conditioned on being simple, with the given seed.
  The girth, regularity, bipartiteness and spectral expansion of the graph are printed to standard error.\
    """,
    help="generate a graph",
    formatter_class=argparse.RawDescriptionHelpFormatter
)
add_graph_arguments(mfperc_gen_parser)
mfperc_gen_parser.add_argument(
    "-o", "--out",
    help="write the edge list to this file instead of standard output",
    action="store", default=None, metavar="FILE", dest="out"
)
mfperc_gen_parser.add_argument(
    "-S", "--no-spectral",
    help="skip the power iteration computing lambda_star",
    action="store_false", default=True, dest="spectral"
)
mfperc_gen_parser.set_defaults(func=mfperc_gen)
