"""
This module offers all environment variables used by mfperc
as python objects.

Example:

    from mfperc import env_var
    print(env_var.MFPERC_OUTPUT_DIR)
"""

import os
from pathlib import Path
from typing import Final, Optional, List, Dict

from mfperc.util import absolute_path

# __all__ not listed to not conflict with the __getattr__

__VARS__: Final[Dict[str, Optional[str]]] = {
    # Directory that receives experiment CSV files and run manifests.
    "MFPERC_OUTPUT_DIR": os.getenv("MFPERC_OUTPUT_DIR"),

    # Default number of worker processes for trial fan-out.
    "MFPERC_WORKERS": os.getenv("MFPERC_WORKERS"),
}


# Allows tests and the cli to override a variable after module initialization
def __getattr__(name):
    if name in __VARS__:
        return __VARS__[name]
    raise AttributeError(f"module 'mfperc.env_var' has no attribute '{name}'")


def list_vars() -> List[str]:
    return list(__VARS__.keys())


def output_dir() -> Path:
    "The default output directory. Falls back to the current working directory."
    value = __VARS__["MFPERC_OUTPUT_DIR"]
    return absolute_path(value) if value else absolute_path(".")


def default_workers() -> int:
    "The default worker count. Unset or unparsable values mean a single process."
    value = __VARS__["MFPERC_WORKERS"]
    try:
        return max(1, int(value)) if value else 1
    except ValueError:
        return 1


MFPERC_REPO_PATH: Final[Path] = absolute_path(__file__).parent.parent.parent
"The mfperc repository root path"
