import json
import shutil
import subprocess
from pathlib import Path

import pytest

from toricube.cli import Report, main, render, run
from toricube.polynomial import Polynomial

DATA = Path(__file__).resolve().parent.parent / "data"


def test_gpoly():
    code, report, text = run(["gpoly", "4"])
    assert code == 0
    assert text.splitlines()[0] == "1 + 11*x + 2*x^2"
    assert report.checks[0].passed


def test_toric_h_square_boundary():
    code, report, text = run(["toric-h", str(DATA / "square-boundary.json")])
    assert code == 0
    assert "toric h: 1 + 2*x + 1*x^2" in text
    table = dict(report.results)["facet types"]
    assert [(row[2], row[3]) for row in table] == [(0, 0), (1, 0), (1, 0), (0, 1)]
    assert "2\t*0\t1\t0" in text


def test_toric_h_with_explicit_shelling(tmp_path):
    code, report, _ = run(["toric-h", str(DATA / "square-boundary.json"), "--shelling", "1,0,3,2"])
    assert code == 0
    code, report, text = run(["toric-h", str(DATA / "square-boundary.json"), "--shelling", "0,2,1,3"])
    assert code == 1
    assert "illegal type" in text
    assert json.loads(report.checks[0].counterexample) == {"order": [0, 2, 1, 3]}


@pytest.mark.parametrize(
    "argv, field",
    [
        (["toric-h", "/nonexistent.json"], "cannot read"),
        (["toric-h", str(DATA / "square-boundary.json"), "--shelling", "0,1"], "--shelling"),
        (["toric-h", str(DATA / "square-boundary.json"), "--shelling", "a,b"], "--shelling"),
        (["contrib", "3", "0", "1"], "not a legal type"),
        (["trees", "5", "--stat", "4,1,0"], "--stat d"),
        (["trees", "5", "--stat", "5,1"], "--stat"),
        (["nc", "4", "--stat", "4,1,0"], "--stat d"),
        (["gpoly", "-1"], "d must be nonnegative"),
        (["crosscheck", "--max-d", "0"], "--max-d"),
        (["tree", "xxF3"], "position 3"),
    ],
)
def test_input_errors_exit_2_and_name_the_field(argv, field):
    code, report, text = run(argv)
    assert code == 2
    assert report is None
    assert field in text


def test_bad_json_complex(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, text = run(["toric-h", str(bad)])
    assert code == 2 and "not JSON" in text
    impure = tmp_path / "impure.json"
    impure.write_text(json.dumps({"ambient": 2, "facets": ["0*", "00"]}))
    code, _, text = run(["toric-h", str(impure)])
    assert code == 2


def test_unknown_command_exits_2(capsys):
    assert run(["frobnicate"])[0] == 2


def test_contrib_both_routes():
    code, report, text = run(["contrib", "4", "1", "1"])
    assert code == 0
    assert [c.name for c in report.checks] == ["closed form = recursion"]
    code, report, text = run(["contrib", "4", "1", "1", "--h"])
    assert code == 0
    assert len(report.checks) == 2


def test_latex_shifted_output():
    code, _, text = run(["gpoly", "4", "--format", "latex", "--basis", "shifted"])
    assert text.splitlines()[0] == "14 + 15(x-1) + 2(x-1)^{2}"


def test_trees_and_nc_commands():
    code, report, _ = run(["trees", "6", "--stat", "6,1,1", "--scheme", "bracket"])
    assert code == 0
    assert all(c.passed for c in report.checks)
    code, report, _ = run(["trees", "5"])
    assert dict(report.results)["forks"] == Polynomial([1, 11, 2])
    code, report, _ = run(["nc", "5", "--fillers"])
    assert code == 0 and dict(report.results)["fillers"] == Polynomial([1, 26, 15])
    code, report, _ = run(["nc", "5", "--stat", "6,2,1"])
    assert code == 0 and len(report.checks) == 2
    code, report, _ = run(["nc", "5"])
    assert dict(report.results)["nonsingleton blocks"] == Polynomial([1, 26, 15])


def test_tree_command_accepts_both_serializations():
    _, a, _ = run(["tree", "xxF2xxF2F1F2"])
    _, b, _ = run(["tree", "[[[], []], [[[], []]]]"])
    assert a.results == b.results
    assert dict(a.results)["partition"] == "13/2/467/5"


def test_motzkin_command():
    code, report, _ = run(["motzkin", "7"])
    assert code == 0
    assert dict(report.results)["Catalan moment"] == 429


def test_json_report_round_trips():
    for argv in (["gpoly", "5"], ["toric-h", str(DATA / "solid-staircase.json")], ["nc", "4", "--fillers"]):
        _, report, text = run(argv + ["--format", "json"])
        data = json.loads(text)
        assert set(data) == {"command", "inputs", "results", "checks"}
        back = Report.from_json(data)
        assert back.to_json() == report.to_json()
        assert render(back, "json") == text


def test_crosscheck_passes_and_is_deterministic():
    code, report, text = run(["crosscheck", "--max-d", "8", "--format", "json"])
    assert code == 0
    assert len(report.checks) == 10 and report.ok
    again = run(["crosscheck", "--max-d", "8", "--format", "json", "--jobs", "2"])[2]
    assert again == text


def test_failed_checks_carry_counterexamples(monkeypatch):
    import toricube.cli as cli

    monkeypatch.setattr(cli, "f_contrib_recursive", lambda d, i, j: Polynomial([42]))
    code, report, text = run(["contrib", "3", "1", "0"])
    assert code == 1
    assert json.loads(report.checks[0].counterexample)["want"] == "42"


def test_main_prints(capsys):
    assert main(["gpoly", "3"]) == 0
    assert capsys.readouterr().out.startswith("1 + 4*x")
    assert main(["contrib", "3", "0", "1"]) == 2
    assert "not a legal type" in capsys.readouterr().err


@pytest.mark.skipif(shutil.which("toricube") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["toricube", "gpoly", "4"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.splitlines()[0] == "1 + 11*x + 2*x^2"
