import csv
import json
import os
import subprocess
import sys
from dataclasses import dataclass, asdict, is_dataclass
from typing import Optional, List, Dict, Any, Sequence, Union, TextIO, Mapping

import numpy as np

from mfperc import env_var
from mfperc.util import ensure_parent_dir, log

__all__ = [
    "TrialRecord",
    "ConditionRow",
    "as_rows",
    "write_csv",
    "write_manifest",
    "summarize",
    "git_describe"
]


@dataclass
class TrialRecord:
    """
    One percolation trial. Window sweeps fill ``lam``, supercritical sweeps fill ``eps``, ``r``, ``threshold_met``
    and ``ratio_2eps``.
    """
    n: int
    d: int
    p: float
    seed: int
    C1: int
    C1_scaled: float
    lam: Optional[float] = None
    eps: Optional[float] = None
    r: Optional[int] = None
    threshold_met: Optional[bool] = None
    ratio_2eps: Optional[float] = None
    diam_scaled: Optional[float] = None
    diam_exact: Optional[bool] = None
    mix_scaled: Optional[float] = None
    runtime: float = 0.0


@dataclass
class ConditionRow:
    family: str
    params: str
    n: int
    d: int
    girth: float
    lambda_star: Optional[float]
    S1: float
    eps: Optional[float]
    r: Optional[int]
    S2: Optional[float]
    girth_lhs: float


def as_rows(records: Sequence[Any]) -> List[Dict[str, Any]]:
    "Turns dataclass records into dictionaries. Dictionaries are passed through."
    return [asdict(record) if is_dataclass(record) else dict(record) for record in records]


def _cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return value


def write_csv(records: Sequence[Any], out: Union[str, os.PathLike, TextIO, None] = None) -> None:
    """
    Writes records as long-form CSV with a header row. Missing values are empty cells.

    :param records: Dataclass records or dictionaries with equal keys.
    :param out: A path, an open text stream or ``None`` for standard output.
    """
    rows = as_rows(records)
    if not rows:
        log("No rows to write")
        return

    def write(stream: TextIO) -> None:
        writer = csv.DictWriter(stream, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _cell(value) for key, value in row.items()})

    if out is None:
        write(sys.stdout)
    elif hasattr(out, "write"):
        write(out)
    else:
        path = ensure_parent_dir(out)
        with open(path, "w", newline="") as f:
            write(f)
        log(f"Wrote {len(rows)} rows to {path}")


def git_describe() -> str:
    "``git describe`` of the source tree, ``unknown`` outside a git checkout."
    try:
        process = subprocess.run(
            ["git", "describe", "--always", "--dirty"],
            cwd=env_var.MFPERC_REPO_PATH, capture_output=True, text=True
        )
    except OSError as e:
        log("git not available:", e)
        return "unknown"
    return process.stdout.strip() if process.returncode == 0 else "unknown"


def write_manifest(
        config: Mapping[str, Any],
        path: Union[str, os.PathLike],
        wall_time: float,
        **extra: Any
) -> None:
    """
    Writes the provenance of a run: its config, master seed, code version and wall time.
    """
    from mfperc import __version__

    manifest = {
        "config": dict(config),
        "seed": config.get("seed"),
        "version": __version__,
        "git": git_describe(),
        "wall_time": wall_time,
        **extra
    }
    path = ensure_parent_dir(path)
    with open(path, "w") as f:
        json.dump(manifest, f, indent=2, default=str)
    log(f"Wrote run manifest {path}")


def summarize(records: Sequence[Any], column: str, by: Sequence[str]) -> List[Dict[str, Any]]:
    """
    Per-cell quantiles of a column. Cells are the distinct values of the ``by`` columns in order of appearance;
    empty values are skipped.

    :return: One row per cell holding the ``by`` values, ``count``, ``mean``, ``q10``, ``median`` and ``q90``.
    """
    cells: Dict[tuple, List[float]] = {}
    for row in as_rows(records):
        values = cells.setdefault(tuple(row[key] for key in by), [])
        if row[column] is not None:
            values.append(float(row[column]))

    summary = []
    for key, values in cells.items():
        entry = dict(zip(by, key))
        if values:
            data = np.asarray(values)
            q10, median, q90 = np.quantile(data, [0.1, 0.5, 0.9])
            entry.update(count=len(values), mean=float(data.mean()), q10=float(q10), median=float(median),
                         q90=float(q90))
        else:
            entry.update(count=0, mean=None, q10=None, median=None, q90=None)
        summary.append(entry)
    return summary
