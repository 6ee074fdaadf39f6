import io
import json

import pytest

from mfperc.harness import TrialRecord, write_csv, write_manifest, summarize, as_rows
from mfperc_test import TEST_DIR


def _records():
    return [
        TrialRecord(n=100, d=99, p=0.01, seed=s, C1=c, C1_scaled=c / 100 ** (2 / 3), lam=0.0)
        for s, c in enumerate([10, 20, 30, 40, 50])
    ]


def test_write_csv_stream():
    stream = io.StringIO()
    write_csv(_records(), stream)
    lines = stream.getvalue().splitlines()

    assert lines[0].startswith("n,d,p,seed,C1,C1_scaled,lam,eps,r")
    assert len(lines) == 6
    # Missing values are empty cells
    assert lines[1].split(",")[7] == ""


def test_write_csv_file():
    path = TEST_DIR / "harness" / "records.csv"
    write_csv(_records(), path)

    assert path.read_text().count("\n") == 6


def test_write_csv_dicts():
    stream = io.StringIO()
    write_csv([{"a": 1, "b": None}], stream)

    assert stream.getvalue() == "a,b\n1,\n"


def test_summarize():
    summary = summarize(_records(), "C1", ["n"])

    assert len(summary) == 1
    assert summary[0]["count"] == 5
    assert summary[0]["median"] == 30
    assert summary[0]["mean"] == 30
    assert summary[0]["q10"] == pytest.approx(14)


def test_summarize_recomputes_from_rows():
    rows = as_rows(_records())

    assert summarize(rows, "C1", ["lam"]) == summarize(_records(), "C1", ["lam"])


def test_write_manifest():
    path = TEST_DIR / "harness" / "manifest.json"
    write_manifest({"kind": "window", "seed": 7}, path, 1.5, records=5)
    manifest = json.loads(path.read_text())

    assert manifest["seed"] == 7
    assert manifest["wall_time"] == 1.5
    assert manifest["records"] == 5
    assert manifest["version"] == "1.0"
    assert isinstance(manifest["git"], str)
