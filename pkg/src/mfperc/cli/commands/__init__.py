from .conditions import mfperc_conditions
from .coupling_check import mfperc_coupling_check
from .explore import mfperc_explore
from .gen import mfperc_gen
from .help import mfperc_help
from .nbrw import mfperc_nbrw
from .percolate import mfperc_percolate
from .supercritical import mfperc_supercritical
from .tree_check import mfperc_tree_check
from .window import mfperc_window

__all__ = [
    "mfperc_conditions",
    "mfperc_coupling_check",
    "mfperc_explore",
    "mfperc_gen",
    "mfperc_help",
    "mfperc_nbrw",
    "mfperc_percolate",
    "mfperc_supercritical",
    "mfperc_tree_check",
    "mfperc_window",
]
