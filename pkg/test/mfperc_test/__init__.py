import sys
from pathlib import Path
from typing import Final


__all__ = [
    "MFPERC_REPO",
    "MFPERC_TEST_REPO",

    "TEST_DIR"
]


MFPERC_REPO: Final[Path] = Path(__file__).absolute().resolve().parent.parent.parent
MFPERC_TEST_REPO: Final[Path] = MFPERC_REPO / "test"

TEST_DIR: Final[Path] = MFPERC_TEST_REPO / "out"


def _setup_mfperc():
    sys.path.append(str(MFPERC_REPO / "src"))
    sys.path.append(str(MFPERC_TEST_REPO))

    TEST_DIR.mkdir(parents=True, exist_ok=True)

    import mfperc
    mfperc.env_var.__VARS__["MFPERC_OUTPUT_DIR"] = str(TEST_DIR)
    mfperc.env_var.__VARS__["MFPERC_WORKERS"] = "1"


_setup_mfperc()
