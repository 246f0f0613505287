import io
import json
import subprocess
import sys

import jsonschema
import pytest

from linesplit.cli import (
    PROBLEM_SCHEMA,
    VERDICT_SCHEMA,
    ProblemError,
    load_problem,
    run,
    solve,
)
from linesplit.engine import profile_cpm, verdict_from_dict


def call(argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, io.StringIO(stdin_text), out, err)
    return code, out.getvalue(), err.getvalue()


def decide_json(problem):
    code, out, err = call(["decide"], json.dumps(problem))
    return code, (json.loads(out) if out else None), err


def test_cp3_tangent_splits():
    code, report, _ = decide_json({"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [[2]], "r": 1})
    assert code == 0
    assert report["verdict"] == "splits"
    assert report["certificate"] == [["1"], ["2"], ["2"]]


def test_cp2_obstructed():
    code, report, _ = decide_json({"base": "cpm", "m": 2, "xi": [3, 3], "lines": [[0]], "r": 1})
    assert code == 1
    assert report["verdict"] == "obstructed" and report["value"] == ["3"] and report["degree"] == "2"


def test_hypotheses_not_met_exit_two():
    code, report, _ = decide_json({"base": "cpm", "m": 4, "xi": [5, 10, 10, 5], "lines": [1, 1, 1]})
    assert code == 2 and report["verdict"] == "hypotheses_not_met"


def test_emitted_verdicts_validate_and_round_trip():
    problems = [
        {"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [2]},
        {"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [1, 1]},
        {"base": "cpm", "m": 6, "xi": [7, 21, 35, 35, 21, 7], "lines": [1, 1, 1]},
        {"base": "cpm", "m": 4, "xi": [5, 10, 10, 5], "lines": [1, 1, 1]},
        {"base": "cpm", "m": 5, "xi": [], "r": 2, "mode": "span"},
    ]
    expected_code = {"splits": 0, "obstructed": 1, "hypotheses_not_met": 2}
    for problem in problems:
        code, report, _ = decide_json(problem)
        jsonschema.validate(report, VERDICT_SCHEMA)
        assert expected_code[report["verdict"]] == code
        assert verdict_from_dict(report).to_dict() == report


def test_profile_problem():
    profile = profile_cpm(3).to_dict()
    problem = {"base": "profile", "m": 3, "profile": profile, "xi": [[4], [6], [4]], "lines": [[2]]}
    jsonschema.validate(problem, PROBLEM_SCHEMA)
    code, report, _ = decide_json(problem)
    assert code == 0 and report["route"] == "one-line"


def test_primary_obstruction_mode():
    report, code = solve({"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [1, 1], "mode": "primary-obstruction"})
    assert report == {"degree": "2", "value": ["1"]} and code == 1


def test_schwarzenberger_mode():
    report, code = solve({"base": "cpm", "m": 3, "xi": [1, 1], "mode": "schwarzenberger"})
    assert code == 1 and report["failing_k"] == "3" and report["value"] == "1/2"
    # (1 + u)(1 + 2u)(1 + 3u): dividing out two lines works, but m = 3 is outside the range for r = 2
    report, code = solve({"base": "cpm", "m": 3, "xi": [6, 11, 6], "lines": [1, 2], "mode": "schwarzenberger"})
    assert code == 2 and report["status"] == "hypothesis_failure" and report["quotient"] == ["3"]
    report, code = solve({"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [2, 1], "mode": "schwarzenberger"})
    assert code == 1 and report["status"] == "inadmissible"


@pytest.mark.parametrize(
    "problem,pointer",
    [
        ({"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [["x"]]}, "/lines/0/0"),
        ({"base": "cpm", "m": 3, "xi": [4, 6, 4, 1]}, "/xi"),
        ({"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [[1, 2]]}, "/lines/0"),
        ({"base": "cpm", "xi": [4, 6, 4], "lines": [1]}, "/"),
        ({"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [1, 1], "r": 1}, "/lines"),
        ({"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [1], "colour": "red"}, "/"),
    ],
)
def test_bad_fields_point_at_the_problem(problem, pointer):
    with pytest.raises(ProblemError) as exc:
        load_problem(problem)
    assert exc.value.pointer == pointer
    code, out, err = call(["decide"], json.dumps(problem))
    assert code == 64 and out == "" and err.startswith(f"linesplit: {pointer}")


def test_malformed_json_exits_64():
    code, _, err = call(["decide"], "{not json")
    assert code == 64 and "invalid JSON" in err


def test_usage_errors_exit_64():
    assert call(["bogus"])[0] == 64
    assert call(["tables", "nope"])[0] == 64
    assert call(["enumerate", "--m", "3"])[0] == 64
    assert call(["schwarz"])[0] == 64
    assert call(["enumerate", "--m", "3", "--r", "2", "--bound", "2"])[0] == 64
    assert call(["tables", "pi", "--m", "4"])[0] == 64


def test_input_file(tmp_path):
    path = tmp_path / "problem.json"
    path.write_text(json.dumps({"base": "cpm", "m": 3, "xi": [4, 6, 4], "lines": [2]}))
    code, out, _ = call(["decide", "--input", str(path)])
    assert code == 0 and json.loads(out)["verdict"] == "splits"
    assert call(["decide", "--input", str(tmp_path / "missing.json")])[0] == 64


def test_tables_pi():
    code, out, _ = call(["tables", "pi", "--m", "8"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2 and "Z/4" in lines[1].split(",")
    code, out, _ = call(["tables", "stiefel2", "--format", "json"])
    data = json.loads(out)
    assert code == 0 and data["columns"] and data["rows"]


def test_schwarz_subcommand():
    code, out, _ = call(["schwarz", "1", "1", "0"])
    assert code == 1 and json.loads(out)["failing_k"] == "3"
    code, out, _ = call(["schwarz", "4", "6", "4"])
    assert code == 0 and json.loads(out)["realizable"] is True
    code, out, _ = call(["schwarz", "--m", "3", "1", "1", "--format", "csv"])
    assert code == 1 and out.splitlines()[1] == "False,3,1/2"


def test_enumerate_subcommand():
    code, out, _ = call(["enumerate", "--m", "3", "--r", "1", "--bound", "6"])
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert {"c": ["4", "6", "4"], "lines": ["2"], "quotient": ["2", "2"]} in records
    code2, out2, _ = call(["enumerate", "--m", "3", "--r", "1", "--bound", "6", "--workers", "2"])
    assert out2 == out
    code, out, _ = call(["enumerate", "--m", "2", "--r", "1", "--bound", "1", "--format", "csv"])
    assert out.splitlines()[0] == "c,lines,quotient"


def test_selftest_subcommand():
    code, out, _ = call(["selftest"])
    assert code == 0
    assert out.count("PASS") == 7 and "FAIL" not in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "linesplit", "decide"],
        input=json.dumps({"base": "cpm", "m": 2, "xi": [3, 3], "lines": [0]}),
        capture_output=True, text=True,
    )
    assert proc.returncode == 1 and json.loads(proc.stdout)["verdict"] == "obstructed"
    proc = subprocess.run([sys.executable, "-m", "linesplit", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 64
