"""
Test the command-line surface: parsing, commands, output formats and exit codes
"""

import sys
import os
import json
from fractions import Fraction

import pytest

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from cli import parse_input, render_text, run
from model import Instance, MatrixTuple
from utils.errors import DimensionError, InputFormatError, InvalidInstanceError

SAMPLES = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'sample_data')


def _sample(name: str) -> str:
    return os.path.join(SAMPLES, name)


def _json_run(capsys, *argv):
    code = run(list(argv) + ["--format", "json"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_parse_input_file_and_inline():
    assert isinstance(parse_input(_sample("p_members_not_ssm_w.json")), MatrixTuple)
    inst = parse_input(_sample("chain.json"))
    assert isinstance(inst, Instance) and inst.k == 2
    assert isinstance(parse_input('{"C": [[[1]], [[2]]], "q": [1]}'), Instance)


def test_parse_input_errors():
    with pytest.raises(InputFormatError, match="Malformed JSON"):
        parse_input('{"C": [')
    with pytest.raises(InputFormatError, match="No such input file"):
        parse_input(_sample("missing.json"))
    with pytest.raises(InputFormatError, match="No such input file"):
        parse_input("instances/none.json")
    with pytest.raises(DimensionError):
        parse_input('{"n": 3, "C": [[[1]], [[1]]]}')
    with pytest.raises(InvalidInstanceError):
        parse_input('{"C": [[[1]], [[1]], [[1]]], "d": [[0]], "q": [1]}')


def test_check_reports_all_properties(capsys):
    code, report = _json_run(capsys, "check", "--input", _sample("ssm_w_not_column_w.json"), "--seed", "4")
    assert code == 0
    assert report["seed"] == 4
    assert report["command"] == "check"
    statuses = {name: v["status"] for name, v in report["verdicts"].items()}
    assert statuses == {"column_w": "No", "column_w0": "Yes", "r0_w": "Yes", "ssm_w": "Yes"}
    assert report["diag_probe"]["status"] == "No"
    assert len(report["normalized_classes"]) == 2
    assert report["normalized_classes"][0]["P"]["status"] == "No"


def test_solve_and_analyze(capsys):
    code, report = _json_run(capsys, "solve", "--input", _sample("diagonal_hlcp.json"), "--newton")
    assert code == 0
    assert report["solution_set"]["points"] == [[[1, 0], [0, 1]]]
    assert report["newton"]["verified"] is True

    code, report = _json_run(capsys, "analyze", "--input", _sample("two_point.json"))
    assert code == 0
    assert report["analysis"]["connected"] is False
    assert report["analysis"]["bounded"] is True


def test_degree_command(capsys):
    code, report = _json_run(capsys, "degree", "--input", _sample("ssm_w_not_column_w.json"))
    assert code == 0
    assert report["degree"]["value"] != 0

    code, report = _json_run(capsys, "degree", "--input", _sample("ray.json"))
    assert code == 0
    assert report == {"command": "degree", "seed": 1, "degree": "undefined", "reason": "not_r0_w"}


def test_fuzz_fixture_suite(capsys, tmp_path):
    code, report = _json_run(capsys, "fuzz", "--suite", "S-FIX", "--trials", "7", "--seed", "2",
                             "--export", str(tmp_path))
    assert code == 0
    assert report["failed"] is False
    assert report["suites"][0]["passes"] == 7
    assert os.path.exists(os.path.join(str(tmp_path), "suite_summary.csv"))


def test_input_errors_exit_2(capsys):
    assert run(["solve", "--input", '{"C": [']) == 2
    assert run(["solve", "--input", _sample("p_members_not_ssm_w.json")]) == 2
    assert run(["check"]) == 2
    assert run(["check", "--bogus"]) == 2
    assert run(["fuzz", "--suite", "S-NOPE"]) == 2
    assert run(["fuzz", "--seed", "-1"]) == 2
    assert run(["check", "--input", _sample("chain.json"), "--config", "missing.yaml"]) == 2
    assert "error" in capsys.readouterr().err


def test_text_output(capsys):
    assert run(["solve", "--input", _sample("chain.json"), "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "solution_set:" in out
    assert render_text({"b": 1, "a": [1, 2]}) == ['a : [1, 2]', 'b : 1']


def test_config_overrides_reach_check_and_degree(tmp_path, capsys):
    path = tmp_path / "override.yaml"
    path.write_text("properties:\n  w0_eps_grid: [2, '1/2']\nsolver:\n  degree_target_denominator: 3\n")
    sample = _sample("ssm_w_not_column_w.json")

    code, report = _json_run(capsys, "check", "--input", sample, "--config", str(path))
    assert code == 0
    assert report["verdicts"]["column_w0"]["certificate"]["eps_grid"] == [2, "1/2"]

    code, report = _json_run(capsys, "degree", "--input", sample, "--config", str(path))
    assert code == 0
    assert all(Fraction(v).denominator in (1, 3) for v in report["degree"]["generic_point"])
