import os
import subprocess
import sys

import pytest

from mfperc import env_var
from mfperc_test import MFPERC_REPO


@pytest.mark.parametrize("module", ["mfperc", "mfperc.harness.records", "mfperc.cli"])
def test_import_in_fresh_interpreter(module):
    process = subprocess.run(
        [sys.executable, "-c", f"import {module}"],
        cwd=MFPERC_REPO, capture_output=True, text=True,
        env={**os.environ, "PYTHONPATH": str(MFPERC_REPO / "src")}
    )

    assert process.returncode == 0, process.stderr


def test_env_var_missing_attribute():
    assert not hasattr(env_var, "__path__")
    with pytest.raises(AttributeError):
        env_var.MFPERC_UNKNOWN


def test_env_var_repo_path():
    assert env_var.MFPERC_REPO_PATH == MFPERC_REPO
