import math
import os
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple, Optional, Sequence, Dict, Any, Union, TextIO

import numpy as np

from mfperc.annotations import InvalidParameterError, OutOfRegimeError, CapacityError, StructureError
from mfperc.conditions import condition_report, window_radius, girth_condition_lhs
from mfperc.coupling import (LabelledTree, joint_sample, check_coupling_inequality, lemma12_lower_bound,
                             covering_lower_bound)
from mfperc.graph import Graph, family_graph, read_edge_list, girth, spectral_expansion
from mfperc.harness.checks import run_checks
from mfperc.harness.config import ExperimentConfig
from mfperc.harness.parallel import parallel_map
from mfperc.harness.records import TrialRecord, ConditionRow, write_csv, write_manifest, summarize
from mfperc.nbrw import averaged_return_profile
from mfperc.percolation import sample_percolation, component_stats, diameter, mixing_time_tv
from mfperc.tree import lemma7_checks, lemma8_checks, TreeLemmaReport
from mfperc.util import derive_seed, info, log

__all__ = [
    "GraphKey",
    "graph_keys",
    "load_graph",
    "critical_p",
    "run_window_sweep",
    "run_supercritical_sweep",
    "run_condition_tables",
    "CouplingSummary",
    "run_coupling_check",
    "run_tree_check",
    "run_experiment",
    "run_and_record"
]

GraphKey = Tuple[Optional[str], Tuple[Tuple[str, int], ...], int, Optional[str], bool]
"(family, sorted parameters, graph seed, graph file, transitive): everything needed to rebuild a graph."


@lru_cache(maxsize=8)
def load_graph(key: GraphKey) -> Graph:
    "Builds (or reads) the graph of a key. Cached per process so that trials of one cell share their graph."
    family, params, seed, graph_file, transitive = key
    if graph_file is not None:
        return read_edge_list(graph_file, transitive=transitive)
    return family_graph(family, dict(params), seed=seed)


def graph_keys(cfg: ExperimentConfig) -> List[GraphKey]:
    "One key per grid entry; random families get a seed derived from the master seed and the entry index."
    if cfg.graph_file is not None:
        return [(None, (), 0, cfg.graph_file, cfg.transitive)]
    return [
        (cfg.family, tuple(sorted(entry.items())), derive_seed(cfg.seed, [index]), None, False)
        for index, entry in enumerate(cfg.grid)
    ]


def critical_p(n: int, d: int, lam: float) -> float:
    """
    ``p = (1 + lam n^(-1/3)) / (d - 1)``

    :exception InvalidParameterError: Raised if ``p`` falls outside ``[0, 1]``.
    """
    p = (1 + lam * n ** (-1 / 3)) / (d - 1)
    if not 0 <= p <= 1:
        raise InvalidParameterError(f"p = {p} is not a probability for n={n}, d={d}, lambda={lam}")
    return p


def _degree(g: Graph) -> int:
    if g.degree is None:
        raise StructureError("Percolation sweeps need a regular graph")
    return g.degree


def _percolate(g: Graph, p: float, seed: int, stats: Sequence[str]) -> Dict[str, Any]:
    rng = np.random.default_rng(seed)
    mask = sample_percolation(g, p, rng, seed=seed)
    components = component_stats(g, mask)
    result: Dict[str, Any] = {"C1": components.c1_size}
    if "diam" in stats:
        estimate = diameter(g, mask, components.c1_vertices)
        result.update(diam_scaled=estimate.length / g.n ** (1 / 3), diam_exact=estimate.exact)
    if "mix" in stats:
        try:
            result["mix_scaled"] = mixing_time_tv(g, mask, components.c1_vertices) / g.n
        except CapacityError as e:
            log("No mixing time:", e)
    return result


def _window_trial(task: Tuple[GraphKey, float, int, Tuple[str, ...]]) -> TrialRecord:
    key, lam, seed, stats = task
    start = time.perf_counter()
    g = load_graph(key)
    d = _degree(g)
    p = critical_p(g.n, d, lam)
    result = _percolate(g, p, seed, stats)
    return TrialRecord(
        n=g.n, d=d, p=p, seed=seed, lam=lam,
        C1_scaled=result["C1"] / g.n ** (2 / 3),
        runtime=time.perf_counter() - start,
        **result
    )


def _supercritical_trial(task: Tuple[GraphKey, float, float, float, int, Tuple[str, ...]]) -> TrialRecord:
    key, c, a, delta, seed, stats = task
    start = time.perf_counter()
    g = load_graph(key)
    d = _degree(g)
    eps = c * g.n ** -a
    x = g.n * eps ** 3
    if x <= math.e:
        raise OutOfRegimeError(f"n * eps^3 = {x} does not exceed e for n={g.n}", value=x)
    try:
        r = window_radius(g.n, eps)
    except OutOfRegimeError as e:
        log("No window radius:", e)
        r = None

    p = (1 + eps) / (d - 1)
    if p > 1:
        raise InvalidParameterError(f"p = {p} is not a probability for n={g.n}, d={d}, eps={eps}")
    result = _percolate(g, p, seed, stats)
    return TrialRecord(
        n=g.n, d=d, p=p, seed=seed, eps=eps, r=r,
        C1_scaled=result["C1"] / g.n ** (2 / 3),
        threshold_met=result["C1"] >= delta * eps * g.n / math.log(x) ** 3,
        ratio_2eps=result["C1"] / (2 * eps * g.n),
        runtime=time.perf_counter() - start,
        **result
    )


def run_window_sweep(cfg: ExperimentConfig) -> List[TrialRecord]:
    """
    Percolates every graph of the grid at ``p = (1 + lambda n^(-1/3)) / (d - 1)`` for every lambda, ``trials``
    times. Trial ``t`` of cell ``(i, j)`` uses the seed derived from ``(seed, i, j, t)``.
    """
    tasks = []
    for i, key in enumerate(graph_keys(cfg)):
        for j, lam in enumerate(cfg.lambdas):
            tasks.extend((key, float(lam), derive_seed(cfg.seed, [i, j, t]), tuple(cfg.stats))
                         for t in range(cfg.trials))
    info(f"Window sweep: {len(tasks)} trials")
    return parallel_map(_window_trial, tasks, cfg.workers)


def run_supercritical_sweep(cfg: ExperimentConfig) -> List[TrialRecord]:
    """
    Percolates every graph of the grid at ``p = (1 + eps) / (d - 1)`` with ``eps = c n^-a``.
    Each record tells whether ``C1 >= delta eps n / ln^3(n eps^3)`` and holds ``C1 / (2 eps n)``.
    """
    rule = cfg.eps_rule
    tasks = []
    for i, key in enumerate(graph_keys(cfg)):
        tasks.extend((key, rule.c, rule.a, cfg.delta, derive_seed(cfg.seed, [i, 0, t]), tuple(cfg.stats))
                     for t in range(cfg.trials))
    info(f"Supercritical sweep: {len(tasks)} trials")
    return parallel_map(_supercritical_trial, tasks, cfg.workers)


def _condition_row(task: Tuple[GraphKey, Optional[float], Optional[float]]) -> ConditionRow:
    key, c, a = task
    g = load_graph(key)
    g_len = girth(g)
    try:
        lambda_star = spectral_expansion(g)
    except (StructureError, CapacityError) as e:
        log("No lambda_star:", e)
        lambda_star = None

    eps = c * g.n ** -a if c is not None else None
    report = condition_report(g, eps)
    family, params = key[0] or "custom", ",".join(f"{k}={v}" for k, v in key[1])
    return ConditionRow(
        family=family, params=params, n=g.n, d=report.d, girth=g_len, lambda_star=lambda_star,
        S1=report.S1, eps=eps, r=report.r, S2=report.S2,
        girth_lhs=girth_condition_lhs(report.d, g_len, g.n)
    )


def run_condition_tables(cfg: ExperimentConfig) -> List[ConditionRow]:
    "One row of exact statistics per graph of the grid."
    rule = cfg.eps_rule
    tasks = [(key, rule.c if rule else None, rule.a if rule else None) for key in graph_keys(cfg)]
    info(f"Condition tables: {len(tasks)} graphs")
    return parallel_map(_condition_row, tasks, cfg.workers)


@dataclass(frozen=True)
class CouplingSummary:
    """
    The outcome of a coupling check: counts of samples satisfying the coupling inequality and of samples where
    the lower inequality is strict, the Monte-Carlo mean of the last shell with its standard error and both
    lower bounds on that mean.
    """
    n: int
    p: float
    r: int
    a_size: int
    trials: int
    passed: int
    strict: int
    mean_shell: float
    standard_error: float
    lemma12_bound: float
    covering_bound: float

    @property
    def holds(self) -> bool:
        return self.passed == self.trials


def run_coupling_check(cfg: ExperimentConfig) -> List[CouplingSummary]:
    """
    For every graph, draws ``trials`` joint samples. Each trial picks a uniform set ``A`` of ``a_size`` vertices
    and a uniform root outside of it.
    """
    summaries = []
    for i, key in enumerate(graph_keys(cfg)):
        g = load_graph(key)
        rng = np.random.default_rng(derive_seed(cfg.seed, [i]))
        trees: Dict[int, LabelledTree] = {}
        passed = strict = 0
        shells = np.zeros(cfg.trials)
        for t in range(cfg.trials):
            A = rng.choice(g.n, size=cfg.a_size, replace=False) if cfg.a_size else np.empty(0, dtype=np.int64)
            outside = np.setdiff1d(np.arange(g.n), A)
            v = int(outside[rng.integers(len(outside))])
            if v not in trees:
                trees[v] = LabelledTree(g, v, cfg.r)
            js = joint_sample(g, v, cfg.p, cfg.r, A.tolist(), rng, tree=trees[v])
            passed += check_coupling_inequality(js)
            last = js.exploration.boundary(cfg.r)
            strict += js.tree_sample.X[cfg.r] < last
            shells[t] = last

        profile = averaged_return_profile(g, 2 * cfg.r)
        summary = CouplingSummary(
            n=g.n, p=cfg.p, r=cfg.r, a_size=cfg.a_size, trials=cfg.trials,
            passed=int(passed), strict=int(strict),
            mean_shell=float(shells.mean()),
            standard_error=float(shells.std(ddof=1) / math.sqrt(cfg.trials)) if cfg.trials > 1 else math.inf,
            lemma12_bound=lemma12_lower_bound(g, cfg.p, cfg.r, cfg.a_size, profile),
            covering_bound=covering_lower_bound(g, cfg.p, cfg.r, cfg.a_size, profile)
        )
        info(f"n={g.n}: {passed}/{cfg.trials} samples satisfy the coupling inequality, {strict} strict")
        summaries.append(summary)
    return summaries


def run_tree_check(cfg: ExperimentConfig) -> List[TreeLemmaReport]:
    "The supercritical and subcritical tree reports at ``(d, eps, r)``; ``trials > 1`` adds Monte-Carlo moments."
    mc_trials = cfg.trials if cfg.trials > 1 else 0
    rng = np.random.default_rng(derive_seed(cfg.seed, [0]))
    return [
        lemma7_checks(cfg.d, cfg.eps, cfg.r, mc_trials, rng),
        lemma8_checks(cfg.d, cfg.eps, cfg.r, mc_trials, rng)
    ]


def run_experiment(cfg: ExperimentConfig) -> list:
    "Runs the experiment named by ``cfg.kind``."
    runners = {
        "window": run_window_sweep,
        "supercritical": run_supercritical_sweep,
        "conditions": run_condition_tables,
        "coupling": run_coupling_check,
        "tree": run_tree_check
    }
    return runners[cfg.validate().kind](cfg)


_SUMMARY_COLUMNS = {
    "window": ("C1_scaled", ["n", "lam"]),
    "supercritical": ("ratio_2eps", ["n"])
}


def run_and_record(
        cfg: ExperimentConfig,
        out: Union[str, os.PathLike, TextIO, None] = None,
        manifest: Union[str, os.PathLike, None] = None
) -> list:
    """
    Runs an experiment, writes its records as CSV and its provenance as JSON, then evaluates the configured checks.
    Sweeps print per-cell quantiles of their scaled component size.

    :param out: The CSV destination, see ``write_csv``. Defaults to ``cfg.output``.
    :param manifest: The run manifest path; no manifest is written if ``None``.
    :exception CheckFailed: Raised after all output is written if a configured check fails.
    """
    start = time.perf_counter()
    records = run_experiment(cfg)
    wall_time = time.perf_counter() - start

    write_csv(records, cfg.output if out is None else out)
    if cfg.kind in _SUMMARY_COLUMNS:
        column, by = _SUMMARY_COLUMNS[cfg.kind]
        for cell in summarize(records, column, by):
            info(", ".join(f"{key}={value}" for key, value in cell.items()))
    if manifest is not None:
        write_manifest(cfg.as_dict(), manifest, wall_time, records=len(records))

    run_checks(records, cfg.checks)
    return records
