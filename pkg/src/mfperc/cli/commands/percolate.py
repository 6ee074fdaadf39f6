import argparse
from typing import Optional

import numpy as np

from mfperc.annotations import CapacityError, InvalidParameterError
from mfperc.cli._inputs import add_graph_arguments, add_output_argument, input_graph, output_path
from mfperc.cli._parser import subcommands
from mfperc.harness import write_csv
from mfperc.percolation import sample_percolation, component_stats, diameter, mixing_time_tv
from mfperc.util import derive_seed, info, log

__all__ = [
    "mfperc_percolate"
]


def mfperc_percolate(
        graph: Optional[str],
        transitive: bool,
        family: Optional[str],
        params: str,
        seed: int,
        out: Optional[str],
        p: float,
        trials: int,
        stats: Optional[str]
) -> None:
    """
    Percolate a graph and report its largest component.

    For argument documentation, see ``mfperc_percolate_parser``.
    """
    stats = stats.split(",") if stats else []
    if not set(stats) <= {"diam", "mix"}:
        raise InvalidParameterError(f"Unknown statistics: {', '.join(set(stats) - {'diam', 'mix'})}")
    g = input_graph(graph, transitive, family, params, seed)

    rows = []
    for trial in range(trials):
        trial_seed = derive_seed(seed, [trial])
        mask = sample_percolation(g, p, np.random.default_rng(trial_seed), seed=trial_seed)
        components = component_stats(g, mask)
        row = {"trial": trial, "seed": trial_seed, "C1": components.c1_size, "components": components.count,
               "diam": None, "diam_exact": None, "mix": None}
        if "diam" in stats:
            estimate = diameter(g, mask, components.c1_vertices)
            row.update(diam=estimate.length, diam_exact=estimate.exact)
        if "mix" in stats:
            try:
                row["mix"] = mixing_time_tv(g, mask, components.c1_vertices)
            except CapacityError as e:
                log("No mixing time:", e)
        rows.append(row)

    write_csv(rows, output_path(out) if out else None)
    info(f"Median C1 over {trials} trials: {float(np.median([row['C1'] for row in rows]))}")


mfperc_percolate_parser = subcommands.add_parser(
    "percolate",
    description=
    """\
  Keep every edge of a graph independently with probability p and report the largest open component.

  With --stats diam, the diameter of the largest component is added (exact for small components, a lower bound
  from repeated sweeps otherwise). With --stats mix, its lazy random walk mixing time in total variation is added
  where the component is small enough for exact evolution.\
    """,
    help="sample bond percolation",
    formatter_class=argparse.RawDescriptionHelpFormatter
)
add_graph_arguments(mfperc_percolate_parser)
add_output_argument(mfperc_percolate_parser)
mfperc_percolate_parser.add_argument(
    "-p", "--p",
    help="the edge probability",
    action="store", type=float, required=True, dest="p"
)
mfperc_percolate_parser.add_argument(
    "-T", "--trials",
    help="independent samples (default: 1)",
    action="store", type=int, default=1, dest="trials"
)
mfperc_percolate_parser.add_argument(
    "--stats",
    help="additional statistics of the largest component: diam, mix or diam,mix",
    action="store", default=None, metavar="STATS", dest="stats"
)
mfperc_percolate_parser.set_defaults(func=mfperc_percolate)
