import json

import pytest

from src.cli.main import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main

T1_D2 = {"n": 2, "terms": [{"alpha": [1, 0], "i": 2}]}
T2_D1 = {"n": 2, "terms": [{"alpha": [0, 1], "i": 1}]}


def _write(tmp_path, name, value):
    path = tmp_path / name
    path.write_text(json.dumps(value), encoding="utf-8")
    return str(path)


def _stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


# ==========================================================
# ALGEBRA SUBCOMMANDS
# ==========================================================


def test_bracket_from_pair_file(tmp_path, capsys):
    path = _write(tmp_path, "pair.json", [T1_D2, T2_D1])
    assert main(["bracket", path]) == EXIT_OK
    out = _stdout_json(capsys)
    assert out["terms"] == [{"alpha": [0, 1], "i": 2, "c": "-1"}, {"alpha": [1, 0], "i": 1, "c": "1"}]


def test_weyl_mul_from_object(tmp_path, capsys):
    t = {"n": 1, "terms": [{"beta": [1], "gamma": [0]}]}
    d = {"n": 1, "terms": [{"beta": [0], "gamma": [1]}]}
    assert main(["weyl-mul", _write(tmp_path, "ab.json", {"a": d, "b": t})]) == EXIT_OK
    terms = _stdout_json(capsys)["terms"]
    assert {"beta": [0], "gamma": [0], "c": "1"} in terms
    assert {"beta": [1], "gamma": [1], "c": "1"} in terms


def test_output_flag_writes_file(tmp_path, capsys):
    out = tmp_path / "result.json"
    assert main(["--output", str(out), "bracket", _write(tmp_path, "pair.json", [T1_D2, T1_D2])]) == EXIT_OK
    assert json.loads(out.read_text(encoding="utf-8")) == {"n": 2, "terms": []}


# ==========================================================
# EXIT CODES
# ==========================================================


def test_gln_check_violation_exits_one(tmp_path, capsys):
    bad = {"n": 2, "E": [[[["0"]], [["1"]]], [[["0"]], [["0"]]]]}
    assert main(["gln-check", _write(tmp_path, "bad.json", bad)]) == EXIT_FAIL
    assert _stdout_json(capsys) == {"violation": [1, 1, 1, 2]}


def test_missing_file_is_usage_error(tmp_path):
    assert main(["bracket", str(tmp_path / "nope.json")]) == EXIT_USAGE


def test_invalid_json_is_usage_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("[1,", encoding="utf-8")
    assert main(["bracket", str(path)]) == EXIT_USAGE
    assert _stdout_json(capsys)["error"]["type"] == "UsageError"


def test_wrong_pair_length_is_usage_error(tmp_path, capsys):
    assert main(["bracket", _write(tmp_path, "one.json", [T1_D2])]) == EXIT_USAGE


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_eval_unknown_op(tmp_path, capsys):
    assert main(["eval", _write(tmp_path, "req.json", {"op": "nope"})]) == EXIT_USAGE
    assert _stdout_json(capsys)["error"]["type"] == "UsageError"


def test_oversized_component_list_exits_two(tmp_path, capsys):
    request = {
        "module": {"family": "tensor", "n": 2, "data": {"exterior": 1}},
        "x": T1_D2,
        "v": {"terms": [{"alpha": [0, 0], "v": ["1", "0", "5"]}]},
    }
    assert main(["act", _write(tmp_path, "act.json", request)]) == EXIT_USAGE
    assert _stdout_json(capsys)["error"]["type"] == "UsageError"


def test_domain_error_exits_one(tmp_path, capsys):
    request = {"module": {"family": "tensor", "n": 2, "data": {"exterior": 1}}, "grade_cap": 1}
    assert main(["--degree", "3", "height", _write(tmp_path, "m.json", request)]) == EXIT_FAIL
    assert _stdout_json(capsys)["error"]["type"] == "WindowError"


# ==========================================================
# ANALYSIS SUBCOMMANDS
# ==========================================================


def test_height_with_global_degree(tmp_path, capsys):
    request = {"module": {"family": "tensor", "n": 2, "data": {"exterior": 1}}}
    assert main(["--degree", "3", "height", _write(tmp_path, "m.json", request)]) == EXIT_OK
    out = _stdout_json(capsys)
    assert out["height"] == 1 and out["window"]["D"] == 3


def test_aphi_det_reads_bare_character(tmp_path, capsys):
    assert main(["aphi-det", _write(tmp_path, "phi.json", {"p0": 1, "p1": 1, "p2": 1, "p3": 1})]) == EXIT_OK
    assert _stdout_json(capsys)["det"] == "-4"


def test_aphi_det_hypothesis_error(tmp_path, capsys):
    assert main(["aphi-det", _write(tmp_path, "phi.json", {"p0": 1, "q0": 1})]) == EXIT_FAIL
    assert _stdout_json(capsys)["error"]["type"] == "HypothesisError"


def test_negative_cyclicity_exits_one(tmp_path, capsys):
    request = {
        "module": {"family": "wphi", "n": 2, "data": {"lambda": "0"}},
        "v": {"terms": [{"alpha": [1, 0], "v": ["1"]}]},
        "target_degree": 1,
    }
    assert main(["--degree", "3", "cyclicity", _write(tmp_path, "c.json", request)]) == EXIT_FAIL
    assert _stdout_json(capsys)["certificate"] is False


def test_intertwine_preset(tmp_path, capsys):
    request = {"map": "phi", "n": 2, "lambda": "2"}
    assert main(["--degree", "2", "intertwine", _write(tmp_path, "i.json", request)]) == EXIT_OK
    assert _stdout_json(capsys)["certificate"] is True


# ==========================================================
# SUITES
# ==========================================================


def test_suite_json_report(capsys):
    assert main(["--seed", "7", "--json", "suite", "p0"]) == EXIT_OK
    report = _stdout_json(capsys)
    assert report["suite"] == "p0" and report["seed"] == 7 and report["passed"] is True


def test_unknown_suite_is_usage_error(capsys):
    assert main(["suite", "nope"]) == EXIT_USAGE
