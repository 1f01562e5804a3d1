import json
import subprocess
import sys

import pytest

from cylpieri import cli
from cylpieri.expansion import Expansion
from cylpieri.oracle import Report
from cylpieri.pieri import column_pieri

from conftest import GOLDEN_LATEX, P


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_golden_latex(capsys):
    assert run(capsys, "pieri", "--m", "3", "--n", "5", "--mu", "2,1", "--size", "3") == (0, GOLDEN_LATEX, "")


def test_text_format(capsys):
    code, out, _ = run(capsys, "pieri", "--m", "3", "--n", "5", "--mu", "2,1", "--size", "3", "--format", "text")
    assert code == 0
    assert out == "(t5-t1)*(t3-t1)*s(2,1,1) + (t5-t1)*s(2,2,1) + q*(t3-t1)*s() + q*s(1)"


def test_classical_drops_q_terms(capsys):
    code, out, _ = run(capsys, "pieri", "--m", "3", "--n", "5", "--mu", "2,1", "--size", "3", "--classical")
    assert code == 0 and "q" not in out and r"\sigma_{(2,2,1)}" in out


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "pieri", "--m", "3", "--n", "5", "--mu", "2,1", "--size", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["operation"] == "pieri-column"
    assert Expansion.from_json(data) == column_pieri(3, P(3, 5, 2, 1))


def test_row_shape(capsys):
    code, out, _ = run(capsys, "pieri", "--m", "3", "--n", "5", "--mu", "2,2,2", "--shape", "row", "--size", "2")
    assert code == 0 and r"q\sigma_{(1,1,1)}" in out


def test_localize(capsys):
    code, out, _ = run(capsys, "localize", "--m", "4", "--n", "15", "--gamma", "1,1", "--eta", "8,8,3")
    assert code == 0
    assert out.startswith("t_2^2 + t_2*t_3")
    code, out, _ = run(capsys, "localize", "--m", "2", "--n", "4", "--gamma", "2", "--eta", "1,1")
    assert (code, out) == (0, "0")


def test_product(capsys):
    code, out, _ = run(capsys, "product", "--m", "2", "--n", "4", "--lambda", "1", "--mu", "1")
    assert (code, out) == (0, r"(-t_2 + t_3)\sigma_{(1)} + \sigma_{(2)} + \sigma_{(1,1)}")
    code, _, err = run(capsys, "product", "--m", "3", "--n", "7", "--lambda", "1", "--mu", "1",
                       "--max-fixed-points", "5")
    assert code == 1 and "exceeds cap" in err


def test_huangli(capsys):
    code, out, _ = run(capsys, "huangli", "--m", "3", "--n", "5", "--mu", "2,1", "--size", "3")
    assert code == 0 and out.endswith(r"\sigma_{(3,2,1)}")


def test_crosscheck(capsys):
    code, out, _ = run(capsys, "crosscheck", "--m", "2", "--n", "4")
    assert (code, out) == (0, "all products agree (3 routes)\nchecked 24, oracle skipped 0")
    code, out, _ = run(capsys, "crosscheck", "--m", "2", "--n", "4", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "ok"


def test_crosscheck_failure_exit(capsys, monkeypatch):
    bad = Report(status="fail", checked=1, failures=[{"route": "gkm"}], message="1 disagreement(s)")
    monkeypatch.setattr(cli, "crosscheck_pieri", lambda *a, **k: bad)
    code, out, _ = run(capsys, "crosscheck", "--m", "2", "--n", "4")
    assert code == 2 and out.startswith("1 disagreement(s)")


@pytest.mark.parametrize("argv", [
    ["pieri", "--m", "3", "--n", "5", "--mu", "9", "--size", "1"],
    ["pieri", "--m", "3", "--n", "5", "--mu", "1", "--size", "7"],
    ["pieri", "--m", "3", "--n", "5", "--mu", "1", "--shape", "row", "--size", "3"],
    ["pieri", "--m", "3", "--n", "5", "--mu", "x", "--size", "1"],
    ["pieri", "--m", "3", "--n", "5", "--mu", "1,2", "--size", "1"],
    ["bogus"],
    [],
])
def test_bad_input_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


@pytest.mark.parametrize("text,parts", [("", []), ("0", [0]), ("()", []), ("(2,1)", [2, 1]), ("3, 1", [3, 1])])
def test_parse_parts(text, parts):
    assert cli.parse_parts(text) == parts


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cylpieri", "pieri", "--m", "3", "--n", "5", "--mu", "2,1",
                           "--size", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == GOLDEN_LATEX
