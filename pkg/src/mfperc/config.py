import json
from pathlib import Path
from typing import Final, List

from mfperc.annotations import DefaultsInfo

__all__ = [
    "DEFAULTS",
    "FAMILIES"
]


# If installed as package, access the package files
if "site-packages" in __file__:
    import importlib.resources
    _CONFIG_DIR_PATH = Path(str(importlib.resources.files("mfperc") / "config"))
else:
    _CONFIG_DIR_PATH = Path(__file__).parent / "config"


_DEFAULTS_CONFIG = _CONFIG_DIR_PATH / "defaults.json"
_FAMILIES_CONFIG = _CONFIG_DIR_PATH / "families.json"

# Numeric caps and tolerances
with open(_DEFAULTS_CONFIG, "r") as __f:
    DEFAULTS: Final[DefaultsInfo] = json.load(__f)
    """
    Contains the caps and tolerances used when no explicit value is passed.
    """

if not isinstance(DEFAULTS, dict):
    raise TypeError("Not a valid defaults config file:", _DEFAULTS_CONFIG)

missing = set(DefaultsInfo.__annotations__) - set(DEFAULTS)
if missing:
    raise TypeError("Defaults config file is missing keys:", sorted(missing), _DEFAULTS_CONFIG)
del missing

# Graph families known to the command line and to experiment configs
with open(_FAMILIES_CONFIG, "r") as __f:
    FAMILIES: Final[List[str]] = json.load(__f)
    """
    Names accepted by ``--family`` and by the ``family`` field of experiment configs.
    """

if not isinstance(FAMILIES, list):
    raise TypeError("Not a valid family config file:", _FAMILIES_CONFIG)

# Remove temporary stuff
del __f, _DEFAULTS_CONFIG, _FAMILIES_CONFIG
