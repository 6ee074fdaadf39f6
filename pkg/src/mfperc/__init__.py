import mfperc.util
import mfperc.graph
import mfperc.nbrw
import mfperc.conditions
import mfperc.tree
import mfperc.coupling
import mfperc.percolation
import mfperc.harness
import mfperc.cli

__version__ = "1.0"

__all__ = [
    # Directories
    "cli",
    "util",
    "graph",
    "nbrw",
    "conditions",
    "tree",
    "coupling",
    "percolation",
    "harness",
    # Files
    "annotations",
    "config",
    "env_var",
]
