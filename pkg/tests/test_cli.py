import csv
import json
import subprocess
import sys

import pytest

from flowtope.cli import main

import printed_arrays as P
from conftest import EXAMPLE_EDGES, normalize_latex

EXAMPLE = ",".join(f"{t}-{h}" for t, h in EXAMPLE_EDGES)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ld_path(capsys):
    code, out, _ = run(capsys, "ld", "0-1,1-2")
    assert code == 0
    assert out.splitlines() == ["(0, 1)  F=[(1, 2, 0)]  codim=1", "(0, 2)  F=[]  codim=0", "(1, 1)  F=[]  codim=0"]


def test_ld_json(capsys):
    code, out, _ = run(capsys, "ld", "0-1,1-2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["leaves"] == 3
    assert [s["codim"] for s in data["sequences"]] == [1, 0, 0]


def test_tri_with_F(capsys):
    code, out, _ = run(capsys, "tri", EXAMPLE, "--F", P.SIMPLE_F_EDGES)
    assert code == 0 and out.splitlines() == [normalize_latex(r) for r in P.SIMPLE_F]


def test_graph_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("2\n0 1\n1 2\n")
    code, out, _ = run(capsys, "volume", str(f))
    assert code == 0 and "volume: 2" in out.splitlines()


def test_kostant_and_feasible(capsys):
    code, out, _ = run(capsys, "kostant", "0-1,0-2,1-2", "2,0,-2", "--format", "json")
    assert json.loads(out)["count"] == 3
    code, out, _ = run(capsys, "feasible", "0-1", "--format", "json", "--", "-1,1")
    assert code == 0 and json.loads(out) == {"feasible": False, "graph": {"n": 1, "edges": [[0, 1, 1]]},
                                              "netflow": [-1, 1], "violating_set": [1]}
    code, out, _ = run(capsys, "feasible", "0-1", "1,-1", "--format", "json")
    assert json.loads(out)["feasible"] is True


def test_ehrhart_text(capsys):
    code, out, _ = run(capsys, "ehrhart", "0-1")
    assert out.strip() == "(1) + (3/2)*t^1 + (1/2)*t^2"


def test_genperm_modes(capsys):
    code, out, _ = run(capsys, "genperm", "0-1,1-2", "--format", "json")
    assert json.loads(out)["lattice_points"] == [[0, 2], [1, 1]]
    code, out, _ = run(capsys, "genperm", "0-1,1-2", "--k", "1", "--format", "json")
    assert json.loads(out)["lattice_points"] == [[0, 1]]
    code, _, err = run(capsys, "genperm", "0-1,1-2", "--k", "1", "--F", "1-2")
    assert code == 2 and "at most one" in err


def test_newton(capsys):
    code, out, _ = run(capsys, "newton", "0-1,1-2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["snp"] and data["polynomial"] == "t1*t2 + t2^2 - t2"


def test_transition_and_schubert(capsys):
    code, out, _ = run(capsys, "transition", "14523")
    assert code == 0
    code2, out2, _ = run(capsys, "schubert", "14523")
    assert out == out2
    assert len(out.split("+")) == 6


def test_grothendieck(capsys):
    code, out, _ = run(capsys, "grothendieck", "132")
    assert out.strip() == "x1*x2 + x1 + x2"


def test_verify_commands(capsys):
    for what in ("theorem-a", "encoding", "corollaries"):
        code, out, _ = run(capsys, "verify", what, EXAMPLE, "--format", "json")
        assert code == 0, out
        assert json.loads(out)["counterexample"] is None


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "corollaries", "0-1,1-2,2-3,2-4", "--format", "json")
    data = json.loads(out)
    assert code == 1 and data["counterexample"]["check"] == "closed_form"


@pytest.mark.parametrize("argv", [
    ["kostant", "0-1", "1,2,3"],
    ["kostant", "0-1", "a,b"],
    ["ld", "1-0"],
    ["transition", "2134"],
    ["schubert", "1123"],
    ["tri", "0-1,1-2", "--F", "0-1"],
    ["scan", "conjecture"],
    ["scan", "conjecture", "--n", "12"],
    ["nonsense"],
])
def test_input_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_scan_conjecture(capsys):
    code, out, _ = run(capsys, "scan", "conjecture", "--n", "4", "--jobs", "1")
    assert code == 0 and out.strip() == "0 counterexamples / 24 permutations"


def test_scan_graphs_resume(tmp_path, capsys):
    path = tmp_path / "scan.csv"
    args = ["scan", "graphs", "--max-vertices", "3", "--csv", str(path), "--jobs", "1", "--format", "json"]
    code, first, _ = run(capsys, *args)
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == len({r["hash"] for r in rows}) == 11
    code, second, _ = run(capsys, *args)
    assert first == second
    assert len(list(csv.DictReader(path.open()))) == 11


def test_reports_are_byte_identical(capsys):
    a = run(capsys, "ld", EXAMPLE, "--strategy", "random:5", "--format", "json")[1]
    b = run(capsys, "ld", EXAMPLE, "--strategy", "random:5", "--format", "json")[1]
    assert a == b


def test_csv_output(capsys):
    code, out, _ = run(capsys, "ld", "0-1,1-2", "--format", "csv")
    rows = list(csv.DictReader(out.splitlines()))
    assert [r["sequence"] for r in rows] == ["[0, 1]", "[0, 2]", "[1, 1]"]


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "volume", "0-1,0-2,1-2", "--format", "json", "--output", str(target))
    assert out == "" and json.loads(target.read_text())["volume"] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "flowtope", "transition", "14523"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.count("x") >= 12
