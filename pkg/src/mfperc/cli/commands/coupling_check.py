import argparse
from typing import Optional

from mfperc.annotations import CheckFailed
from mfperc.cli._inputs import add_graph_arguments, add_output_argument, output_path
from mfperc.cli._parser import subcommands
from mfperc.graph import parse_params
from mfperc.harness import ExperimentConfig, run_coupling_check, write_csv
from mfperc.util import info

__all__ = [
    "mfperc_coupling_check"
]


def mfperc_coupling_check(
        graph: Optional[str],
        transitive: bool,
        family: Optional[str],
        params: str,
        seed: int,
        out: Optional[str],
        p: float,
        r: int,
        trials: int,
        a_size: int
) -> None:
    """
    Check the coupling between graph exploration and covering tree percolation.

    For argument documentation, see ``mfperc_coupling_check_parser``.
    """
    cfg = ExperimentConfig(
        kind="coupling", family=family, grid=[parse_params(params)] if family else [], graph_file=graph,
        transitive=transitive, seed=seed, trials=trials, p=p, r=r, a_size=a_size
    ).validate()
    summaries = run_coupling_check(cfg)
    write_csv(summaries, output_path(out) if out else None)

    for summary in summaries:
        if not summary.holds:
            raise CheckFailed(f"{summary.trials - summary.passed} of {summary.trials} joint samples violate "
                              f"the coupling inequality on n={summary.n}")
        info(f"All {summary.trials} joint samples satisfy the coupling inequality, {summary.strict} strictly")


mfperc_coupling_check_parser = subcommands.add_parser(
    "coupling-check",
    description=
    """\
  Sample the ball of radius r around a uniform vertex outside a uniform set A together with percolation on the
  labelled covering tree of the graph, sharing the coins of corresponding edges.

  Every sample must satisfy X[k] <= |shell k| <= H[k] for k <= r, where H[k] counts the depth-k tree nodes
  connected to the root and X[k] those among them whose root path is pure and avoids A.
  The output reports the number of samples satisfying the inequality, the number with X[r] < |shell r|, the mean
  size of shell r and two lower bounds on that mean.

  Exits with code 1 if a sample violates the inequality.\
    """,
    help="covering tree coupling",
    formatter_class=argparse.RawDescriptionHelpFormatter
)
add_graph_arguments(mfperc_coupling_check_parser)
add_output_argument(mfperc_coupling_check_parser)
mfperc_coupling_check_parser.add_argument(
    "-p", "--p",
    help="the edge probability",
    action="store", type=float, required=True, dest="p"
)
mfperc_coupling_check_parser.add_argument(
    "-r", "--r",
    help="the radius",
    action="store", type=int, required=True, dest="r"
)
mfperc_coupling_check_parser.add_argument(
    "-T", "--trials",
    help="joint samples (default: 1000)",
    action="store", type=int, default=1000, dest="trials"
)
mfperc_coupling_check_parser.add_argument(
    "-a", "--a-size",
    help="the size of the excluded set A (default: 0)",
    action="store", type=int, default=0, dest="a_size"
)
mfperc_coupling_check_parser.set_defaults(func=mfperc_coupling_check)
