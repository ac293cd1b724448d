#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for the lctpoly command line
"""

import json

import pytest

from cli import EXIT_FAILED, EXIT_IMPROPER, EXIT_OK, EXIT_USAGE, SUITES, parse_document, run_suite
from cli.input_files import InputFileError
from config.paths import paths
from main import main


@pytest.fixture
def run(tmp_path, capsys):
    """Run main() with an empty config and return (exit code, parsed stdout)"""
    config = tmp_path / "missing-config.json"

    def _run(*argv, output="json"):
        code = main(["--config", str(config), "--output", output] + [str(a) for a in argv])
        out = capsys.readouterr().out
        return code, (json.loads(out) if output == "json" else out)

    return _run


@pytest.fixture
def write(tmp_path):
    def _write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path

    return _write


def fixture(name):
    return paths.fixture(name)


def test_compute_coordinate_ideals(run):
    code, payload = run("compute", fixture("xy.json"))
    assert code == EXIT_OK
    assert payload["inequalities"] == [{"normal": [0, 1], "offset": "1"}, {"normal": [1, 0], "offset": "1"}]
    assert payload["nonnegative"] is True
    assert payload["vertices"] == [["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]]
    assert payload["provenance"] == "monomial"


def test_compute_resolution_fixtures(run):
    code, payload = run("compute", fixture("two_cusps.json"))
    assert code == EXIT_OK
    assert [row["normal"] for row in payload["inequalities"]] == [[4, 10], [10, 4]]
    assert {row["offset"] for row in payload["inequalities"]} == {"7"}
    code, payload = run("compute", fixture("line_and_parabola.json"))
    assert code == EXIT_OK
    assert ["1/2", "1"] in payload["vertices"]


def test_compute_output_round_trips(run, write):
    _, first = run("compute", fixture("x2y3.json"))
    code, second = run("compute", write("out.json", first))
    assert code == EXIT_OK
    assert second["inequalities"] == first["inequalities"]
    assert second["vertices"] == [["0"], ["5/6"]]


def test_compute_is_deterministic(run):
    assert run("compute", fixture("two_cusps.json")) == run("compute", fixture("two_cusps.json"))


def test_compute_approx(run):
    code, payload = run("--approx", "compute", fixture("x2y3.json"))
    assert code == EXIT_OK
    assert payload["approx"]["vertices"][1] == ["0.833333"]


def test_invalid_inputs_exit_with_usage_error(run, write, tmp_path):
    cases = [
        {"format": 1, "vars": 2, "ideals": []},
        {"format": 2, "vars": 1, "ideals": [{"monomials": [[1]]}]},
        {"format": 1, "vars": 2, "ideals": [{"monomials": [[1, 0]]}], "colour": "red"},
        {"format": 1, "ideals": [{"monomials": [[1, 0]]}]},
        {"format": 1, "vars": 2, "ideals": [{"monomials": [[1, 0, 0]]}]},
    ]
    for k, document in enumerate(cases):
        code, payload = run("compute", write(f"bad{k}.json", document))
        assert code == EXIT_USAGE, document
        assert payload["success"] is False
    code, _ = run("compute", tmp_path / "nowhere.json")
    assert code == EXIT_USAGE


def test_improper_ideal_exits_with_3(run, write):
    code, payload = run("compute", write("unit.json", {"format": 1, "vars": 2, "ideals": [{"monomials": [[0, 0]]}]}))
    assert code == EXIT_IMPROPER
    assert payload["success"] is False


def test_unbounded_resolution_exits_with_3(run, write):
    document = {"format": 1, "resolution": {"kappa": [0, 0], "alpha": [[1, 0], [1, 0]]}}
    code, _ = run("compute", write("res.json", document))
    assert code == EXIT_IMPROPER


def test_lct_command(run):
    assert run("lct", fixture("x2y3.json"))[1]["lct"] == "5/6"
    assert run("lct", fixture("m2.json"))[1]["lct"] == "1"
    code, _ = run("lct", fixture("xy.json"))
    assert code == EXIT_USAGE
    code, payload = run("lct", fixture("xy.json"), "--coordinate", 2)
    assert code == EXIT_OK
    assert payload["coordinate"] == 2 and payload["lct"] == "1"
    code, _ = run("lct", fixture("xy.json"), "--coordinate", 3)
    assert code == EXIT_USAGE


def test_distance_command(run):
    assert run("distance", fixture("xy.json"), fixture("line_and_parabola.json"))[1]["sq_distance"] == "1/8"
    assert run("distance", fixture("x2.json"), fixture("x2_y4.json"))[1]["sq_distance"] == "1/16"
    assert run("distance", fixture("xy.json"), fixture("unit_square.json"))[1]["sq_distance"] == "0"
    code, _ = run("distance", fixture("xy.json"), fixture("x2y3.json"))
    assert code == EXIT_USAGE


def test_sequence_truncation(run):
    code, payload = run("sequence", fixture("x2y3.json"), "--mode", "truncate", "--prefix", 6, "--window", 3)
    assert code == EXIT_OK
    assert payload["stationary"] is True
    assert payload["m0"] == 3
    assert payload["support"] == [1]
    assert payload["candidate_limit"]["vertices"] == [["0"], ["5/6"]]
    assert payload["sq_distance_profile"][:3] == ["49/36", "1/36", "0"]


def test_sequence_prism_family(run):
    code, payload = run("sequence", fixture("xy.json"), "--mode", "ex11", "--prefix", 4, "--window", 2, "--axis", 1)
    assert code == EXIT_OK
    assert payload["stationary"] is False
    assert payload["m0"] is None
    assert payload["base_sq_distance_profile"] == ["1", "1/4", "1/9", "1/16"]


def test_sequence_rejects_short_prefix_and_bad_axis(run):
    code, _ = run("sequence", fixture("x2y3.json"), "--prefix", 2, "--window", 3)
    assert code == EXIT_USAGE
    code, _ = run("sequence", fixture("xy.json"), "--mode", "ex11", "--prefix", 3, "--window", 2, "--axis", 3)
    assert code == EXIT_USAGE


def test_verify_suite(run):
    code, payload = run("verify", "--suite", "order", "--seed", 1, "--count", 5, "--threads", 2)
    assert code == EXIT_OK
    assert payload["success"] is True
    assert payload["seed"] == 1 and payload["passed"] == 5


def test_verify_rejects_unknown_suite(run):
    with pytest.raises(SystemExit) as excinfo:
        run("verify", "--suite", "nonsense")
    assert excinfo.value.code == 2


def test_verify_failure_reports_reproducer(monkeypatch):
    import cli.verify_suites as suites

    generate, _ = suites.SUITES["order"]
    monkeypatch.setitem(suites.SUITES, "order", (generate, lambda instance: (False, "forced")))
    report = run_suite("order", seed=3, count=4, threads=1)
    payload = report.to_payload()
    assert not report.success
    assert payload["failed"] == 4
    assert payload["reproducer"]["message"] == "forced"
    assert "size" not in payload["reproducer"]


def test_verify_exit_code_on_failure(run, monkeypatch):
    import cli.verify_suites as suites

    generate, _ = suites.SUITES["order"]
    monkeypatch.setitem(suites.SUITES, "order", (generate, lambda instance: (False, "forced")))
    code, payload = run("verify", "--suite", "order", "--count", 2)
    assert code == EXIT_FAILED
    assert payload["success"] is False


def test_text_output(run):
    code, out = run("lct", fixture("x2y3.json"), output="text")
    assert code == EXIT_OK
    assert "lct: 5/6" in out


def test_parse_document_rejects_two_sources():
    with pytest.raises(InputFileError):
        parse_document({"format": 1, "vars": 1, "ideals": [{"monomials": [[1]]}],
                        "polytope": {"dim": 1, "inequalities": []}})


def test_undecodable_input_exits_with_usage_error(run, tmp_path):
    path = tmp_path / "latin1.json"
    path.write_bytes(b"\xff\xfe{\"format\": 1}")
    code, payload = run("compute", path)
    assert code == EXIT_USAGE
    assert payload["success"] is False
    assert "UTF-8" in payload["message"]


def test_zero_normal_polytope_exits_with_usage_error(run, write):
    document = {"format": 1, "polytope": {"dim": 2, "nonnegative": True,
                                          "inequalities": [{"normal": [0, "0/3"], "offset": "1"}]}}
    code, payload = run("compute", write("zero.json", document))
    assert code == EXIT_USAGE
    assert "zero vector" in payload["message"]


@pytest.mark.parametrize("prefix, window", [(3, 3), (0, 2), (4, 0), (2, -1)])
def test_sequence_requires_prefix_longer_than_positive_window(run, prefix, window):
    code, payload = run("sequence", fixture("x2y3.json"), "--prefix", prefix, "--window", window)
    assert code == EXIT_USAGE
    assert payload["success"] is False


def test_sequence_ascending_chain_is_stationary(run):
    code, payload = run("sequence", fixture("x2y3.json"), "--mode", "ascending", "--prefix", 6, "--window", 3)
    assert code == EXIT_OK
    assert payload["stationary"] is True
    assert payload["m0"] == 3
    assert payload["candidate_limit"]["vertices"] == [["0"], ["2"]]


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_every_verify_suite_passes(suite):
    report = run_suite(suite, seed=7, count=3, threads=2)
    assert report.success, report.to_payload()
    assert report.passed == 3


def test_prop1_suite_reports_failing_structural_checks(monkeypatch):
    from lct import LctManager

    monkeypatch.setattr(LctManager, "sanity_report", lambda self, ideals: {"down_closed": False, "outer_box": True})
    report = run_suite("prop1", seed=5, count=2, threads=1)
    assert not report.success
    assert report.to_payload()["reproducer"]["message"] == "structural checks fail: down_closed"
