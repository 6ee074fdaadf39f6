import argparse
from typing import Optional

import numpy as np

from mfperc.annotations import CheckFailed
from mfperc.cli._inputs import add_output_argument, output_path
from mfperc.cli._parser import subcommands
from mfperc.harness import write_csv
from mfperc.tree import lemma7_checks, lemma8_checks
from mfperc.util import info

__all__ = [
    "mfperc_tree_check"
]


def mfperc_tree_check(
        d: int,
        eps: float,
        r: int,
        mc_trials: int,
        seed: int,
        out: Optional[str]
) -> None:
    """
    Check the survival bounds of near-critical tree percolation.

    For argument documentation, see ``mfperc_tree_check_parser``.
    """
    rng = np.random.default_rng(seed)
    reports = [lemma7_checks(d, eps, r, mc_trials, rng), lemma8_checks(d, eps, r, mc_trials, rng)]
    rows = [{"regime": regime, "holds": report.holds, **vars(report)}
            for regime, report in zip(("supercritical", "subcritical"), reports)]
    write_csv(rows, output_path(out) if out else None)

    failed = [row["regime"] for row in rows if not row["holds"]]
    if failed:
        raise CheckFailed(f"Survival bounds violated in the {' and '.join(failed)} regime")
    info("Survival bounds hold in both regimes")


mfperc_tree_check_parser = subcommands.add_parser(
    "tree-check",
    description=
    """\
  Evaluate percolation on the (d-1)-ary tree with root degree d at p = (1 +- eps) / (d - 1).

  For both signs, the exact probability that level r is reached is compared with its lower and upper bound.
  The exact second moment of the level size and the conditional second moment of the level sizes summed over
  r/2..r are reported as ratios to their claimed order. With --mc-trials, the latter is also estimated by sampling.

  Exits with code 1 if a survival bound is violated.\
    """,
    help="tree percolation bounds",
    formatter_class=argparse.RawDescriptionHelpFormatter
)
mfperc_tree_check_parser.add_argument(
    "-d", "--d",
    help="the degree",
    action="store", type=int, required=True, dest="d"
)
mfperc_tree_check_parser.add_argument(
    "-e", "--eps",
    help="the distance from criticality, in (0, 1/2)",
    action="store", type=float, required=True, dest="eps"
)
mfperc_tree_check_parser.add_argument(
    "-r", "--r",
    help="the depth",
    action="store", type=int, required=True, dest="r"
)
mfperc_tree_check_parser.add_argument(
    "-N", "--mc-trials",
    help="sampled trees for the Monte-Carlo moment (default: 0, skipped)",
    action="store", type=int, default=0, dest="mc_trials"
)
mfperc_tree_check_parser.add_argument(
    "-s", "--seed",
    help="the seed of the Monte-Carlo moment (default: 0)",
    action="store", type=int, default=0, dest="seed"
)
add_output_argument(mfperc_tree_check_parser)
mfperc_tree_check_parser.set_defaults(func=mfperc_tree_check)
