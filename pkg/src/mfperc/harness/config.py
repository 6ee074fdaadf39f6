import json
import os
from dataclasses import dataclass, field, asdict
from typing import Optional, List, Dict, Any, Union

from mfperc.annotations import InvalidParameterError
from mfperc.config import FAMILIES
from mfperc.graph import FAMILY_PARAMETERS
from mfperc.util import absolute_path

__all__ = [
    "EXPERIMENT_KINDS",
    "CHECK_TYPES",
    "EpsRule",
    "ExperimentConfig",
    "load_experiment_config"
]

EXPERIMENT_KINDS = ("window", "supercritical", "conditions", "coupling", "tree")
CHECK_TYPES = ("median_band", "monotone", "rate")


@dataclass(frozen=True)
class EpsRule:
    "``eps(n) = c * n^-a``"
    c: float = 1.0
    a: float = 0.25

    def __call__(self, n: int) -> float:
        return self.c * n ** -self.a


@dataclass
class ExperimentConfig:
    """
    A declarative experiment.

    The graphs are the family members listed in ``grid`` (or the single graph read from ``graph_file``).
    ``window`` sweeps use ``lambdas``, ``supercritical`` sweeps and condition tables use ``eps_rule``,
    ``coupling`` checks use ``p``, ``r`` and ``a_size``, ``tree`` checks use ``d``, ``eps`` and ``r``.
    """
    kind: str
    family: Optional[str] = None
    grid: List[Dict[str, int]] = field(default_factory=list)
    graph_file: Optional[str] = None
    transitive: bool = False
    lambdas: List[float] = field(default_factory=lambda: [0.0])
    eps_rule: Optional[EpsRule] = None
    delta: float = 0.01
    trials: int = 1
    seed: int = 0
    stats: List[str] = field(default_factory=list)
    p: Optional[float] = None
    r: Optional[int] = None
    a_size: int = 0
    d: Optional[int] = None
    eps: Optional[float] = None
    workers: Optional[int] = None
    output: Optional[str] = None
    checks: List[Dict[str, Any]] = field(default_factory=list)

    def validate(self) -> "ExperimentConfig":
        """
        :exception InvalidParameterError: Raised naming the first invalid field.
        """
        if self.kind not in EXPERIMENT_KINDS:
            raise InvalidParameterError(f"kind: unknown experiment kind '{self.kind}'")
        if self.trials < 1:
            raise InvalidParameterError(f"trials: must be at least 1, got {self.trials}")
        if any(not isinstance(x, (int, float)) or x != x or abs(x) == float("inf") for x in self.lambdas):
            raise InvalidParameterError(f"lambdas: must be finite numbers, got {self.lambdas}")
        if not set(self.stats) <= {"diam", "mix"}:
            raise InvalidParameterError(f"stats: only 'diam' and 'mix' are known, got {self.stats}")

        if self.kind != "tree":
            if self.graph_file is None and self.family is None:
                raise InvalidParameterError("family: either a family or a graph_file is required")
            if self.family is not None:
                if self.family not in FAMILIES:
                    raise InvalidParameterError(f"family: unknown family '{self.family}'")
                if not self.grid:
                    raise InvalidParameterError("grid: at least one parameter set is required")
                for entry in self.grid:
                    missing = set(FAMILY_PARAMETERS[self.family]) - set(entry)
                    if missing:
                        raise InvalidParameterError(f"grid: {entry} lacks {', '.join(sorted(missing))}")

        if self.kind == "supercritical":
            if self.eps_rule is None:
                raise InvalidParameterError("eps_rule: required for supercritical sweeps")
            if not 0 < self.eps_rule.a < 1 / 3:
                raise InvalidParameterError(f"eps_rule: exponent a must lie in (0, 1/3), got {self.eps_rule.a}")
        if self.kind == "coupling" and (self.p is None or self.r is None):
            raise InvalidParameterError("p: coupling checks need p and r")
        if self.kind == "tree" and (self.d is None or self.eps is None or self.r is None):
            raise InvalidParameterError("d: tree checks need d, eps and r")

        for check in self.checks:
            if check.get("type") not in CHECK_TYPES:
                raise InvalidParameterError(f"checks: unknown check type in {check}")
            if "column" not in check:
                raise InvalidParameterError(f"checks: {check} names no column")
        return self

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


def load_experiment_config(path: Union[str, os.PathLike]) -> ExperimentConfig:
    """
    Reads and validates an experiment config JSON file.

    :exception InvalidParameterError: Raised for unknown fields or invalid values.
    """
    path = absolute_path(path)
    with open(path, "r") as f:
        raw = json.load(f)
    if not isinstance(raw, dict):
        raise InvalidParameterError(f"Not a valid experiment config file: {path}")

    if raw.get("eps_rule") is not None:
        raw["eps_rule"] = EpsRule(**raw["eps_rule"])
    try:
        config = ExperimentConfig(**raw)
    except TypeError as e:
        raise InvalidParameterError(f"Invalid experiment config {path}: {e}")
    return config.validate()
