import csv

import pytest

from mfperc.annotations import CheckFailed
from mfperc.cli import main
from mfperc.graph import read_edge_list
from mfperc_test import TEST_DIR


def _read(name):
    with open(TEST_DIR / "cli" / name, newline="") as f:
        return list(csv.DictReader(f))


def test_gen():
    main(["-q", "gen", "-f", "hamming", "--params", "k=2,m=3", "-o", "cli/hamming.txt"])
    g = read_edge_list(TEST_DIR / "cli" / "hamming.txt")

    assert (g.n, g.num_edges) == (9, 18)


def test_gen_stdout(capsys):
    main(["-q", "gen", "-f", "complete", "--params", "n=4", "-S"])
    lines = capsys.readouterr().out.splitlines()

    assert lines[0] == "4 6"
    assert len(lines) == 7


def test_nbrw_exact():
    main(["-q", "nbrw", "-f", "complete", "--params", "n=4", "-n", "4", "-o", "cli/nbrw.csv"])
    rows = _read("nbrw.csv")

    assert [row["s"] for row in rows] == ["1", "2", "3", "4"]
    assert float(rows[0]["R"]) == 0
    assert float(rows[2]["R"]) == pytest.approx(1 / 2)
    assert float(rows[3]["R"]) == pytest.approx(1 / 4)


def test_nbrw_sampled():
    main(["-q", "nbrw", "-f", "complete", "--params", "n=4", "-n", "3", "-N", "2000", "-o", "cli/nbrw_mc.csv"])
    rows = _read("nbrw_mc.csv")

    assert float(rows[2]["R"]) == pytest.approx(1 / 2, abs=6 * float(rows[2]["standard_error"]) + 1e-9)


def test_tree_check():
    main(["-q", "tree-check", "-d", "3", "-e", "0.1", "-r", "20", "-o", "cli/tree.csv"])
    rows = _read("tree.csv")

    assert [row["regime"] for row in rows] == ["supercritical", "subcritical"]
    assert all(row["holds"] == "True" for row in rows)


def test_coupling_check():
    main(["-q", "coupling-check", "-f", "complete", "--params", "n=27", "-p", "0.04", "-r", "2", "-T", "100",
          "-o", "cli/coupling.csv"])
    row, = _read("coupling.csv")

    assert row["passed"] == row["trials"] == "100"


def test_percolate():
    main(["-q", "percolate", "-f", "complete", "--params", "n=100", "-p", "0.02", "-T", "3", "--stats", "diam",
          "-o", "cli/percolate.csv"])
    rows = _read("percolate.csv")

    assert len(rows) == 3
    assert all(1 <= int(row["C1"]) <= 100 for row in rows)


def test_explore():
    main(["-q", "explore", "-f", "complete", "--params", "n=200", "-p", "0.005", "-r", "3", "-M", "20",
          "-T", "5", "-R", "2", "-o", "cli/explore.csv"])
    rows = _read("explore.csv")

    assert {row["run"] for row in rows} <= {"0", "1"}
    assert 2 <= len(rows) <= 10


def test_window():
    main(["-q", "window", "-f", "complete", "--params", "n=200", "-l", "-1", "-l", "1", "-T", "2",
          "-o", "cli/window.csv", "-m", "cli/window.json"])
    rows = _read("window.csv")

    assert [row["lam"] for row in rows] == ["-1.0", "-1.0", "1.0", "1.0"]
    assert (TEST_DIR / "cli" / "window.json").exists()


def test_supercritical_sweep():
    main(["-q", "supercritical", "-f", "hamming", "--params", "k=2", "-w", "m=20,24", "-T", "2",
          "-o", "cli/supercritical.csv"])
    rows = _read("supercritical.csv")

    assert [row["n"] for row in rows] == ["400", "400", "576", "576"]


def test_conditions():
    main(["-q", "conditions", "-f", "hamming", "--params", "k=2,m=3", "-o", "cli/conditions.csv"])
    row, = _read("conditions.csv")

    assert float(row["girth"]) == 3
    assert float(row["lambda_star"]) == pytest.approx(0.5)


def test_failing_check():
    path = TEST_DIR / "cli" / "failing.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("""{
        "kind": "window",
        "family": "complete",
        "grid": [{"n": 100}],
        "trials": 2,
        "checks": [{"type": "median_band", "column": "C1", "low": 1000}]
    }""")

    with pytest.raises(CheckFailed):
        main(["-q", "window", "-c", str(path), "-o", "cli/failing.csv"])
