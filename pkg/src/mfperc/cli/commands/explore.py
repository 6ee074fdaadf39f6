import argparse
from typing import Optional

import numpy as np

from mfperc.cli._inputs import add_graph_arguments, add_output_argument, input_graph, output_path
from mfperc.cli._parser import subcommands
from mfperc.harness import write_csv
from mfperc.percolation import multi_root_process
from mfperc.util import derive_seed, info

__all__ = [
    "mfperc_explore"
]


def mfperc_explore(
        graph: Optional[str],
        transitive: bool,
        family: Optional[str],
        params: str,
        seed: int,
        out: Optional[str],
        p: float,
        r: int,
        M: int,
        T_max: int,
        runs: int,
        stop_on_success: bool
) -> None:
    """
    Run the multi-root exploration.

    For argument documentation, see ``mfperc_explore_parser``.
    """
    g = input_graph(graph, transitive, family, params, seed)

    rows = []
    explored = np.zeros(runs)
    for run in range(runs):
        rng = np.random.default_rng(derive_seed(seed, [run]))
        outcome = multi_root_process(g, p, r, M, T_max, rng, stop_on_success=stop_on_success)
        explored[run] = outcome.explored
        rows.extend({"run": run, **vars(step), "first_success": outcome.first_success,
                     "halted": outcome.halted_reason} for step in outcome.steps)

    write_csv(rows, output_path(out) if out else None)
    info(f"Mean explored vertices over {runs} runs: {explored.mean()}")


mfperc_explore_parser = subcommands.add_parser(
    "explore",
    description=
    """\
  Repeatedly explore the open ball of radius r around a uniform random root, ignoring every vertex explored in an
  earlier step, until a ball holds more than M vertices or Tmax roots were tried.
  One CSV row is written per step.

  With --no-stop, the process runs for all Tmax steps.\
    """,
    help="multi-root exploration",
    formatter_class=argparse.RawDescriptionHelpFormatter
)
add_graph_arguments(mfperc_explore_parser)
add_output_argument(mfperc_explore_parser)
mfperc_explore_parser.add_argument(
    "-p", "--p",
    help="the edge probability",
    action="store", type=float, required=True, dest="p"
)
mfperc_explore_parser.add_argument(
    "-r", "--r",
    help="the radius of every ball",
    action="store", type=int, required=True, dest="r"
)
mfperc_explore_parser.add_argument(
    "-M", "--M",
    help="a ball succeeds if it holds more than M vertices",
    action="store", type=int, required=True, dest="M"
)
mfperc_explore_parser.add_argument(
    "-T", "--Tmax",
    help="the largest number of roots",
    action="store", type=int, required=True, dest="T_max"
)
mfperc_explore_parser.add_argument(
    "-R", "--runs",
    help="independent runs of the process (default: 1)",
    action="store", type=int, default=1, dest="runs"
)
mfperc_explore_parser.add_argument(
    "-n", "--no-stop",
    help="keep exploring after the first success",
    action="store_false", default=True, dest="stop_on_success"
)
mfperc_explore_parser.set_defaults(func=mfperc_explore)
