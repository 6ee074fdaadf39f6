import argparse
from typing import Optional

from mfperc.cli._inputs import add_experiment_arguments, experiment_config, output_path, parse_eps_rule
from mfperc.cli._parser import subcommands
from mfperc.harness import run_and_record

__all__ = [
    "mfperc_conditions"
]


def mfperc_conditions(
        graph: Optional[str],
        transitive: bool,
        family: Optional[str],
        params: str,
        seed: int,
        out: Optional[str],
        config: Optional[str],
        sweep: Optional[str],
        workers: Optional[int],
        manifest: Optional[str],
        eps_rule: Optional[str]
) -> None:
    """
    Tabulate the condition statistics of graphs.

    For argument documentation, see ``mfperc_conditions_parser``.
    """
    cfg = experiment_config(
        "conditions", config, graph, transitive, family, params, sweep, seed, workers,
        eps_rule=parse_eps_rule(eps_rule) if eps_rule else None
    )
    destination = out or cfg.output
    run_and_record(
        cfg,
        out=output_path(destination) if destination else None,
        manifest=output_path(manifest) if manifest else None
    )


mfperc_conditions_parser = subcommands.add_parser(
    "conditions",
    description=
    """\
  Compute the exact statistics of both mean-field conditions for every graph, one CSV row per graph.

  S1 = n^(1/3) sum_{t <= n^(1/3)} t R[t] is always computed. With --eps-rule, the radius r and
  S2 = eps^-1 r sum_{t <= 2r} ((1 + eps)^min(t, r) - 1) R[t] are added where eps = eps(n) is in regime.
  Each row also holds the girth, the spectral expansion lambda_star and the girth condition term
  (d-1)^(-floor(girth/2)) n^(1/3) ln^2 n.

  The command never judges the asymptotics; it emits the sequence.\
    """,
    help="condition statistics along a family",
    formatter_class=argparse.RawDescriptionHelpFormatter
)
add_experiment_arguments(mfperc_conditions_parser, trials=False)
mfperc_conditions_parser.add_argument(
    "-e", "--eps-rule",
    help="the supercriticality as a function of n, e.g. n^-0.25",
    action="store", default=None, metavar="RULE", dest="eps_rule"
)
mfperc_conditions_parser.set_defaults(func=mfperc_conditions)
