import json
import os

import pytest

import nonassoclab
from nonassoclab.const import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK
from nonassoclab.labcli import get_arguments, main

EXAMPLES = os.path.join(os.path.dirname(nonassoclab.__file__), "example_config")


def example(name):
    return os.path.join(EXAMPLES, name)


def run_json(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if code != EXIT_INPUT_ERROR else None


def test_build(capsys):
    code, report = run_json(capsys, "build", example("h3_reals.yaml"))
    assert code == EXIT_OK
    assert report["schema"] == 1
    assert report["report"] == "build"
    assert report["algebra"]["dim"] == 6
    assert report["unit"] == {"a11": "1", "a22": "1", "a33": "1"}


def test_build_text(capsys):
    assert main(["build", example("h3_reals.yaml"), "--format", "text"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "dim 6" in out
    assert "a11 a22 a33" in out


def test_identities_expectations(capsys):
    spec = example("custom_not_power_associative.yaml")
    code, report = run_json(capsys, "identities", spec, "--expect", "jordan=fails")
    assert code == EXIT_OK
    assert report["expectations_met"]
    statuses = {v["identity"]: v["status"] for v in report["verdicts"]}
    assert statuses["jordan"] == "fails"
    code, report = run_json(capsys, "identities", spec, "--expect", "jordan=holds")
    assert code == EXIT_CHECK_FAILED
    assert not report["expectations_met"]


def test_reports_are_reproducible(capsys):
    argv = ["compat", example("h2_reals_pair.yaml"), "--seed", "5"]
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == first
    assert json.loads(first)["profiles"][0]["level"] == "boolean"


def test_spectral_inline_element(capsys):
    code, report = run_json(capsys, "spectral", example("spin5.yaml"), "--element", "u1=3/5,u2=4/5")
    assert code == EXIT_OK
    assert report["exact"]
    assert sorted(p["eigenvalue"] for p in report["pairs"]) == ["-1", "1"]


def test_certify_and_replay(capsys, tmp_path):
    code, report = run_json(capsys, "certify", "golden", "--ring", "split-complex")
    assert code == EXIT_OK
    assert report["verdict"] == "not-positive"
    stored = tmp_path / "golden.json"
    stored.write_text(json.dumps(report))
    code, replay = run_json(capsys, "replay", str(stored))
    assert code == EXIT_OK
    assert replay["source"] == "certificate"
    assert replay["passed"]
    code, _ = run_json(capsys, "certify", "golden", "--replay", str(stored))
    assert code == EXIT_OK


def test_tampered_report_fails_replay(capsys, tmp_path):
    main(["certify", "nilpotent", "--ring", "split-complex"])
    report = json.loads(capsys.readouterr().out)
    report["objects"]["x"] = report["objects"]["e"]
    stored = tmp_path / "tampered.json"
    stored.write_text(json.dumps(report))
    assert main(["replay", str(stored)]) == EXIT_CHECK_FAILED


def test_screen_bioctonions(capsys):
    code, report = run_json(
        capsys, "certify", "screen", "--ring", "bioctonions", "--involution", "right", "--n", "2"
    )
    assert code == EXIT_OK
    assert report["verdict"] == "excluded"
    assert report["certificates"][0]["kind"] == "golden"


def test_precondition_failure_exit_code(capsys):
    assert main(["certify", "golden", "--ring", "split-complex", "--alpha", "1=1"]) == EXIT_CHECK_FAILED


def test_input_errors(capsys, tmp_path, monkeypatch):
    assert main(["build", str(tmp_path / "missing.yaml")]) == EXIT_INPUT_ERROR
    bad = tmp_path / "bad.yaml"
    bad.write_text("algebra:\n  spin:\n    dim: 3\nelement:\n  u1: 1/0\n")
    assert main(["spectral", str(bad)]) == EXIT_INPUT_ERROR
    assert main(["replay", str(bad)]) == EXIT_INPUT_ERROR
    monkeypatch.setenv("NONASSOC_LAB_SEED", "not-a-seed")
    assert main(["build", example("h3_reals.yaml")]) == EXIT_INPUT_ERROR
    assert capsys.readouterr().out == ""


def test_unknown_command():
    with pytest.raises(SystemExit):
        get_arguments(["frobnicate"])


@pytest.mark.parametrize(
    "ring, n, verdict",
    [("octonions", "4", "excluded"), ("reals", "2", "JB-consistent"), ("sedenions", "2", "spin-dense")],
)
def test_screen_verdicts(capsys, ring, n, verdict):
    code, report = run_json(capsys, "certify", "screen", "--ring", ring, "--n", n)
    assert code == EXIT_OK
    assert report["verdict"] == verdict


def test_non_power_associative_element_has_no_spectrum(capsys):
    assert main(["spectral", example("custom_not_power_associative.yaml")]) == EXIT_CHECK_FAILED
    assert capsys.readouterr().out == ""
