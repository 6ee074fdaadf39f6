import argparse
from typing import Optional

from mfperc.cli._inputs import add_experiment_arguments, experiment_config, output_path, parse_eps_rule
from mfperc.cli._parser import subcommands
from mfperc.harness import run_and_record

__all__ = [
    "mfperc_supercritical"
]


def mfperc_supercritical(
        graph: Optional[str],
        transitive: bool,
        family: Optional[str],
        params: str,
        seed: int,
        out: Optional[str],
        config: Optional[str],
        sweep: Optional[str],
        trials: int,
        workers: Optional[int],
        manifest: Optional[str],
        eps_rule: str,
        delta: float,
        stats: Optional[str]
) -> None:
    """
    Run a supercritical sweep.

    For argument documentation, see ``mfperc_supercritical_parser``.
    """
    cfg = experiment_config(
        "supercritical", config, graph, transitive, family, params, sweep, seed, workers,
        trials=trials, eps_rule=parse_eps_rule(eps_rule), delta=delta, stats=stats.split(",") if stats else []
    )
    destination = out or cfg.output
    run_and_record(
        cfg,
        out=output_path(destination) if destination else None,
        manifest=output_path(manifest) if manifest else None
    )


mfperc_supercritical_parser = subcommands.add_parser(
    "supercritical",
    description=
    """\
  Percolate graphs slightly above the critical probability.

  Every graph is percolated at p = (1 + eps) / (d - 1) with eps = c n^-a, 0 < a < 1/3.
  Each trial records C1 / (2 eps n) and whether C1 >= delta eps n / ln^3(n eps^3).
  The radius r of the explored balls is recorded where it is at least 1.\
    """,
    help="supercritical sweep",
    formatter_class=argparse.RawDescriptionHelpFormatter
)
add_experiment_arguments(mfperc_supercritical_parser)
mfperc_supercritical_parser.add_argument(
    "-e", "--eps-rule",
    help="the supercriticality as a function of n (default: n^-0.25)",
    action="store", default="n^-0.25", metavar="RULE", dest="eps_rule"
)
mfperc_supercritical_parser.add_argument(
    "-d", "--delta",
    help="the constant of the component size threshold (default: 0.01)",
    action="store", type=float, default=0.01, dest="delta"
)
mfperc_supercritical_parser.add_argument(
    "--stats",
    help="additional statistics of the largest component: diam, mix or diam,mix",
    action="store", default=None, metavar="STATS", dest="stats"
)
mfperc_supercritical_parser.set_defaults(func=mfperc_supercritical)
