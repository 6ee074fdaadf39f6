from typing import Sequence, Any, Dict, List, Union

import numpy as np

from mfperc.annotations import CheckFailed, InvalidParameterError
from mfperc.harness.records import as_rows, summarize
from mfperc.util import info

__all__ = [
    "run_checks"
]


def _select(rows: List[Dict[str, Any]], n: Union[int, str, None]) -> List[Dict[str, Any]]:
    # "max" keeps the largest graph of the run
    if n is None:
        return rows
    if n == "max":
        n = max(row["n"] for row in rows)
    return [row for row in rows if row["n"] == n]


def _median_band(rows, check) -> List[str]:
    failures = []
    for cell in summarize(rows, check["column"], check.get("by", ["n"])):
        median = cell["median"]
        if median is None or not check.get("low", -np.inf) <= median <= check.get("high", np.inf):
            failures.append(f"median {check['column']} = {median} outside "
                            f"[{check.get('low')}, {check.get('high')}] at {cell}")
    return failures


def _monotone(rows, check) -> List[str]:
    by = check.get("by", "lam")
    graph_keys = [key for key in ("family", "params", "n") if key in rows[0] and key != by]
    graphs: Dict[tuple, List[Dict[str, Any]]] = {}
    for row in rows:
        graphs.setdefault(tuple(row[key] for key in graph_keys), []).append(row)

    failures = []
    for graph, graph_rows in graphs.items():
        cells = sorted(summarize(graph_rows, check["column"], [by]), key=lambda cell: cell[by])
        medians = [cell["median"] for cell in cells]
        if any(m is None for m in medians) or not all(a < b for a, b in zip(medians, medians[1:])):
            failures.append(f"medians of {check['column']} are not strictly increasing in {by} "
                            f"at {dict(zip(graph_keys, graph))}: {medians}")
    return failures


def _rate(rows, check) -> List[str]:
    values = [row[check["column"]] for row in rows if row[check["column"]] is not None]
    if not values:
        return [f"no values of {check['column']}"]
    rate = float(np.mean([bool(value) for value in values]))
    if rate < check.get("at_least", 1.0):
        return [f"rate of {check['column']} is {rate}, below {check.get('at_least', 1.0)}"]
    return []


_CHECKS = {
    "median_band": _median_band,
    "monotone": _monotone,
    "rate": _rate
}


def run_checks(records: Sequence[Any], checks: Sequence[Dict[str, Any]]) -> None:
    """
    Evaluates configured checks on the records of a run.

    - ``median_band``: the median of ``column`` lies in ``[low, high]`` in every cell of ``by`` (default ``["n"]``).
    - ``monotone``: on every graph of the run, the medians of ``column`` strictly increase with ``by`` (default
      ``lam``).
    - ``rate``: the fraction of true values of ``column`` is at least ``at_least`` (default 1).

    Each check may restrict the records with ``n``, a vertex count or ``"max"`` for the largest graph.

    :exception CheckFailed: Raised listing every failing check.
    """
    rows = as_rows(records)
    failures = []
    for check in checks:
        if check.get("type") not in _CHECKS:
            raise InvalidParameterError(f"Unknown check type in {check}")
        selected = _select(rows, check.get("n"))
        if not selected:
            failures.append(f"no records for {check}")
            continue
        failed = _CHECKS[check["type"]](selected, check)
        info(f"Check {check['type']} on {check['column']}: {'failed' if failed else 'passed'}")
        failures.extend(failed)

    if failures:
        raise CheckFailed("\n".join(failures))
