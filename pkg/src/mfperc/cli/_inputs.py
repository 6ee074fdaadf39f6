import argparse
import os
import re
import sys
from contextlib import contextmanager
from typing import Optional, Union, TextIO, Iterator, Any

from mfperc import env_var
from mfperc.annotations import InvalidParameterError
from mfperc.config import FAMILIES
from mfperc.graph import Graph, family_graph, parse_params, read_edge_list
from mfperc.harness import EpsRule, ExperimentConfig, load_experiment_config
from mfperc.util import absolute_path, ensure_parent_dir

__all__ = [
    "add_graph_arguments",
    "add_output_argument",
    "input_graph",
    "parse_eps_rule",
    "output_path",
    "open_output",
    "add_experiment_arguments",
    "experiment_config"
]


def add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    "Adds ``--graph``, ``--transitive``, ``--family``, ``--params`` and ``--seed`` to a subcommand."
    group = parser.add_argument_group("graph")
    group.add_argument(
        "-g", "--graph",
        help="read the graph from an edge-list file",
        action="store", default=None, metavar="FILE", dest="graph"
    )
    group.add_argument(
        "-t", "--transitive",
        help="declare the graph read with --graph vertex-transitive",
        action="store_true", default=False, dest="transitive"
    )
    group.add_argument(
        "-f", "--family",
        help="build a member of a graph family instead",
        action="store", default=None, choices=FAMILIES, dest="family"
    )
    group.add_argument(
        "--params",
        help="family parameters, e.g. k=2,m=30 for hamming or n=1000,d=3 for regular",
        action="store", default="", metavar="K=V,...", dest="params"
    )
    parser.add_argument(
        "-s", "--seed",
        help="the master seed (default: 0)",
        action="store", type=int, default=0, dest="seed"
    )


def add_output_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-o", "--out",
        help="write the CSV output to this file instead of standard output",
        action="store", default=None, metavar="FILE", dest="out"
    )


def input_graph(graph: Optional[str], transitive: bool, family: Optional[str], params: str, seed: int) -> Graph:
    """
    Reads or builds the graph selected by the shared graph options.

    :exception InvalidParameterError: Raised if neither or both of ``graph`` and ``family`` are given.
    """
    if (graph is None) == (family is None):
        raise InvalidParameterError("Select a graph with either --graph FILE or --family NAME --params K=V,...")
    if graph is not None:
        return read_edge_list(graph, transitive=transitive)
    return family_graph(family, parse_params(params), seed=seed)


_EPS_RULE = re.compile(r"^\s*(?:(?P<c>[0-9.eE+-]+)\s*\*?\s*)?n\s*\^\s*-\s*(?P<a>[0-9.eE+-]+)\s*$")


def parse_eps_rule(text: str) -> EpsRule:
    """
    Parses ``eps(n) = c n^-a`` written as ``n^-0.25``, ``2*n^-0.25`` or ``2n^-0.25``.

    :exception InvalidParameterError: Raised for anything else.
    """
    match = _EPS_RULE.match(text)
    if match is None:
        raise InvalidParameterError(f"Expected an eps rule like 'n^-0.25' or '2*n^-0.25', got '{text}'")
    try:
        return EpsRule(c=float(match["c"] or 1.0), a=float(match["a"]))
    except ValueError:
        raise InvalidParameterError(f"Not a number in the eps rule '{text}'")


def output_path(out: Union[str, os.PathLike]) -> str:
    "Relative output paths are resolved against ``MFPERC_OUTPUT_DIR``."
    if os.path.isabs(out):
        return str(absolute_path(out))
    return str(env_var.output_dir() / out)


@contextmanager
def open_output(out: Optional[str]) -> Iterator[TextIO]:
    "Opens the output file for writing, or yields standard output."
    if out is None:
        yield sys.stdout
        return
    path = ensure_parent_dir(output_path(out))
    with open(path, "w", newline="") as f:
        yield f


def add_experiment_arguments(parser: argparse.ArgumentParser, trials: bool = True) -> None:
    "Adds the graph options plus ``--config``, ``--sweep``, ``--workers``, ``--manifest`` and ``--out``."
    add_graph_arguments(parser)
    add_output_argument(parser)
    group = parser.add_argument_group("experiment")
    group.add_argument(
        "-c", "--config",
        help="read the experiment from a JSON config file. all other experiment and graph options are ignored.",
        action="store", default=None, metavar="FILE", dest="config"
    )
    group.add_argument(
        "-w", "--sweep",
        help="sweep one family parameter over a list of values, e.g. m=20,30,40",
        action="store", default=None, metavar="K=V1,V2,...", dest="sweep"
    )
    if trials:
        group.add_argument(
            "-T", "--trials",
            help="trials per cell (default: 1)",
            action="store", type=int, default=1, dest="trials"
        )
    group.add_argument(
        "-j", "--workers",
        help="worker processes (default: MFPERC_WORKERS or 1)",
        action="store", type=int, default=None, dest="workers"
    )
    group.add_argument(
        "-m", "--manifest",
        help="write a JSON run manifest (config, seed, code version, wall time) to this file",
        action="store", default=None, metavar="FILE", dest="manifest"
    )


def _sweep_grid(params: str, sweep: Optional[str]) -> list:
    base = parse_params(params)
    if sweep is None:
        return [base]
    name, sep, values = sweep.partition("=")
    if not sep:
        raise InvalidParameterError(f"Expected 'name=v1,v2,...', got '{sweep}'")
    try:
        return [{**base, name.strip(): int(value)} for value in values.split(",") if value.strip()]
    except ValueError:
        raise InvalidParameterError(f"Sweep values must be integers, got '{values}'")


def experiment_config(
        kind: str,
        config: Optional[str],
        graph: Optional[str],
        transitive: bool,
        family: Optional[str],
        params: str,
        sweep: Optional[str],
        seed: int,
        workers: Optional[int],
        **fields: Any
) -> ExperimentConfig:
    """
    The experiment described by a config file or, without one, by the command line options.

    :exception InvalidParameterError: Raised if the config file describes another kind of experiment.
    """
    if config is not None:
        cfg = load_experiment_config(config)
        if cfg.kind != kind:
            raise InvalidParameterError(f"{config} describes a '{cfg.kind}' experiment, not '{kind}'")
        return cfg

    if (graph is None) == (family is None):
        raise InvalidParameterError("Select graphs with either --graph FILE or --family NAME --params K=V,...")
    return ExperimentConfig(
        kind=kind,
        family=family,
        grid=_sweep_grid(params, sweep) if family is not None else [],
        graph_file=graph,
        transitive=transitive,
        seed=seed,
        workers=workers,
        **fields
    ).validate()
