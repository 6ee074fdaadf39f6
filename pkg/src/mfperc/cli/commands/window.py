import argparse
from typing import Optional, List

from mfperc.cli._inputs import add_experiment_arguments, experiment_config, output_path
from mfperc.cli._parser import subcommands
from mfperc.harness import run_and_record

__all__ = [
    "mfperc_window"
]


def mfperc_window(
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
        lambdas: List[float],
        stats: Optional[str]
) -> None:
    """
    Run a scaling window sweep.

    For argument documentation, see ``mfperc_window_parser``.
    """
    cfg = experiment_config(
        "window", config, graph, transitive, family, params, sweep, seed, workers,
        trials=trials, lambdas=lambdas or [0.0], stats=stats.split(",") if stats else []
    )
    destination = out or cfg.output
    run_and_record(
        cfg,
        out=output_path(destination) if destination else None,
        manifest=output_path(manifest) if manifest else None
    )


mfperc_window_parser = subcommands.add_parser(
    "window",
    description=
    """\
  Percolate graphs inside the critical scaling window.

  Every graph is percolated at p = (1 + lambda n^(-1/3)) / (d - 1) for every lambda, --trials times per lambda.
  Each trial records the size C1 of the largest component and C1 n^(-2/3). With --stats diam,mix it also records
  the diameter of the largest component scaled by n^(-1/3) and its mixing time scaled by 1/n.
  Trials draw their seeds from the master seed and their position in the sweep, so the output does not depend on
  the number of workers.\
    """,
    help="critical window sweep",
    formatter_class=argparse.RawDescriptionHelpFormatter
)
add_experiment_arguments(mfperc_window_parser)
mfperc_window_parser.add_argument(
    "-l", "--lambda",
    help="a window parameter lambda. may be provided multiple times (default: 0).",
    action="append", type=float, default=None, dest="lambdas"
)
mfperc_window_parser.add_argument(
    "--stats",
    help="additional statistics of the largest component: diam, mix or diam,mix",
    action="store", default=None, metavar="STATS", dest="stats"
)
mfperc_window_parser.set_defaults(func=mfperc_window)
