#!/bin/python3

if __name__ != "__main__":
    raise ImportError("mfperc/__main__.py may only be used as main script")

import sys
from pathlib import Path

if sys.version_info < (3, 9):
    print("mfperc needs python 3.9 or newer", file=sys.stderr)
    sys.exit(2)

try:
    import mfperc
except ImportError:
    sys.path.append(str(Path(__file__).parent.parent.expanduser().resolve().absolute()))

import traceback

from mfperc.annotations import MfpercCancel, CheckFailed
from mfperc.cli import main
from mfperc.util import log


def run() -> int:
    "Runs the command line interface and maps its outcome to an exit status."
    try:
        main()
    except MfpercCancel:
        return 0
    except CheckFailed as e:
        print("Checks failed:", e, sep="\n", file=sys.stderr)
        return 1
    except Exception as e:
        log("".join(traceback.format_exception(type(e), e, e.__traceback__)))
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1
    return 0


sys.exit(run())
