from typing import Mapping, Any, Dict

from mfperc.annotations import InvalidParameterError
from mfperc.config import FAMILIES
from mfperc.graph.core import Graph
from mfperc.graph.generators import complete_graph, hamming_graph, random_regular_graph
from mfperc.graph.lps import lps_ramanujan_graph

__all__ = [
    "FAMILY_PARAMETERS",
    "family_graph",
    "parse_params"
]

FAMILY_PARAMETERS: Dict[str, tuple] = {
    "complete": ("n",),
    "hamming": ("k", "m"),
    "regular": ("n", "d"),
    "lps": ("p", "q")
}
"Parameter names of every family, in the order the generator takes them."


def parse_params(text: str) -> Dict[str, int]:
    """
    Parses ``k=v`` pairs separated by commas, e.g. ``k=2,m=30``.

    :exception InvalidParameterError: Raised for pairs without ``=`` or with non-integer values.
    """
    result = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise InvalidParameterError(f"Expected 'name=value', got '{item}'")
        try:
            result[key.strip()] = int(value)
        except ValueError:
            raise InvalidParameterError(f"Parameter '{key.strip()}' is not an integer: '{value}'")
    return result


def family_graph(family: str, params: Mapping[str, Any], seed: int = 0) -> Graph:
    """
    Creates a member of a graph family listed in ``config/families.json``.

    :param family: ``complete`` (n), ``hamming`` (k, m), ``regular`` (n, d) or ``lps`` (p, q).
    :param params: The family parameters by name.
    :param seed: The seed of random families.
    :exception InvalidParameterError: Raised for unknown families or missing parameters.
    """
    if family not in FAMILIES:
        raise InvalidParameterError(f"Unknown graph family '{family}', choose from {', '.join(FAMILIES)}")

    names = FAMILY_PARAMETERS[family]
    missing = [name for name in names if name not in params]
    if missing:
        raise InvalidParameterError(f"Family '{family}' needs the parameters {', '.join(missing)}")
    values = [int(params[name]) for name in names]

    if family == "complete":
        return complete_graph(*values)
    if family == "hamming":
        return hamming_graph(*values)
    if family == "regular":
        return random_regular_graph(*values, seed=seed)
    return lps_ramanujan_graph(*values)
