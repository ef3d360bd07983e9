import json
import subprocess
import sys
from pathlib import Path

import pytest

from belief_kernel.cli import main

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, err


# ---------------------------------------------------------------------- eval


def test_eval_empty_steps(capsys):
    code, data, _ = run_json(capsys, "eval", str(SCENARIOS / "empty-steps.json"))
    assert code == 0
    assert len(data["trace"]) == 1
    assert data["trace"][0]["beliefs"] == {"formula": "a & b", "models": ["a b"]}


def test_eval_running_example(capsys):
    code, data, _ = run_json(capsys, "eval", str(SCENARIOS / "running-example.json"))
    assert code == 0
    step1 = data["trace"][1]
    assert step1["op"] == "contract" and step1["formula"] == "a"
    assert step1["beliefs"]["models"] == ["a b", "-a b"]
    assert data["operators"] == {"contraction": "contract-natural", "revision": "revise-natural"}
    assert data["final"]["ranks"] == {"a b": 0, "a -b": 0, "-a b": 0, "-a -b": 1}


def test_eval_party_flips_contractional(capsys):
    code, data, _ = run_json(capsys, "eval", str(SCENARIOS / "party.json"))
    assert code == 0
    flags = [row["queries"]["(gavin -: bernd)"] for row in data["trace"]]
    assert flags == [True, False]


def test_eval_penguin_contrast(capsys):
    code, data, _ = run_json(capsys, "eval", str(SCENARIOS / "penguin-contrast.json"))
    assert code == 0
    assert data["trace"][0]["queries"] == {"(!f | p)": True, "(!f -: p)": False}


def test_eval_operator_choice_changes_result(capsys):
    _, natural, _ = run_json(capsys, "eval", str(SCENARIOS / "running-example.json"))
    _, moderate, _ = run_json(
        capsys, "eval", str(SCENARIOS / "running-example.json"), "--operator-contraction", "moderate"
    )
    assert moderate["operators"]["contraction"] == "contract-moderate"
    assert natural["trace"][1]["beliefs"] == moderate["trace"][1]["beliefs"]
    assert natural["final"] != moderate["final"]


def test_eval_output_is_byte_identical(capsys, tmp_path):
    path = str(SCENARIOS / "penguin-learn.json")
    first, second = tmp_path / "1.json", tmp_path / "2.json"
    assert main(["eval", path, "--out", str(first)]) == 0
    assert main(["eval", path, "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert capsys.readouterr().out == ""


def test_eval_inconsistent_revision_exits_3(capsys):
    code, out, err = run(capsys, "eval", str(SCENARIOS / "inconsistent-revise.json"))
    assert code == 3
    assert "step 2" in err


def _write(tmp_path, data) -> str:
    p = tmp_path / "s.json"
    p.write_text(json.dumps(data) if not isinstance(data, str) else data, encoding="utf-8")
    return str(p)


@pytest.mark.parametrize(
    "data",
    [
        "{not json",
        {"initial": {"beliefs": "a"}},
        {"signature": ["a"], "initial": {"beliefs": "a &"}},
        {"signature": ["a"], "initial": {"beliefs": "zz"}},
        {"signature": ["a"], "initial": {"beliefs": "a"}, "steps": [{"op": "expand", "formula": "a"}]},
        {"signature": ["a"], "initial": {"ranks": {"a": 0}}},
        {"signature": ["a"], "initial": {"beliefs": "a"}, "queries": ["a"]},
    ],
)
def test_eval_bad_scenarios_exit_2(capsys, tmp_path, data):
    code, _, err = run(capsys, "eval", _write(tmp_path, data))
    assert code == 2
    assert err.startswith("error:")


def test_eval_inconsistent_initial_beliefs_exit_3(capsys, tmp_path):
    path = _write(tmp_path, {"signature": ["a"], "initial": {"beliefs": "a & !a"}})
    assert run(capsys, "eval", path)[0] == 3


def test_eval_missing_file_exit_2(capsys, tmp_path):
    assert run(capsys, "eval", str(tmp_path / "nope.json"))[0] == 2


# --------------------------------------------------------------------- check


def test_check_moderate_ic1_holds(capsys):
    code, data, _ = run_json(
        capsys, "check", "--operator", "moderate", "--postulate", "IC1", "--signature-size", "2", "--mode", "exhaustive"
    )
    assert code == 0
    assert data["status"] == "holds"
    assert data["checks_performed"] == 75 * 256
    assert "witness" not in data


def test_check_trivial_independence_fails_with_witness(capsys):
    code, data, _ = run_json(capsys, "check", "--operator", "trivial", "--postulate", "IND-C", "--signature-size", "2")
    assert code == 1
    assert data["status"] == "fails"
    assert set(data["witness"]) >= {"state", "formulas"}


def test_check_unknown_postulate_exit_2(capsys):
    code, _, err = run(capsys, "check", "--operator", "natural", "--postulate", "BOGUS")
    assert code == 2
    assert "BOGUS" in err


def test_check_scope_overflow_exit_2(capsys):
    assert run(capsys, "check", "--operator", "natural", "--postulate", "C1", "--signature-size", "3")[0] == 2
    assert run(capsys, "check", "--operator", "natural", "--postulate", "C1", "--signature-size", "4", "--mode", "sampled")[0] == 2


def test_check_resolves_operator_by_postulate_flavor(capsys):
    code, data, _ = run_json(capsys, "check", "--operator", "natural", "--postulate", "r1")
    assert code == 0 and data["operator"] == "revise-natural"
    assert run(capsys, "check", "--operator", "lex", "--postulate", "C1")[0] == 2
    assert run(capsys, "check", "--operator", "moderate", "--postulate", "R1")[0] == 2


def test_check_sampled_mode(capsys):
    code, data, _ = run_json(
        capsys, "check", "--operator", "moderate", "--postulate", "MC", "--signature-size", "3",
        "--mode", "sampled", "--seed", "5", "--count", "300",
    )
    assert code == 0
    assert data["scope"] == {"signature_size": 3, "mode": "sampled", "seed": 5, "count": 300}


def test_argparse_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["check", "--postulate", "C1"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--signature-size", "0"])
    assert info.value.code == 2


# ------------------------------------------------------------ counterexample


def test_counterexample_found(capsys):
    code, data, _ = run_json(capsys, "counterexample", "--operator", "natural", "--postulate", "IC1-LEFT")
    assert code == 1
    assert data["witness"] is not None


def test_counterexample_absent(capsys):
    code, data, _ = run_json(capsys, "counterexample", "--operator", "moderate", "--postulate", "C1")
    assert code == 0
    assert data["witness"] is None


def test_universal_counterexample(capsys):
    code, data, _ = run_json(capsys, "counterexample", "--universal", "--postulate", "IC2'")
    assert code == 1
    assert data["witness"]["postulate"] == "IC2-PRIME"


# ------------------------------------------------------------ verify-theorem


@pytest.mark.parametrize(
    "operator, theorem",
    [("moderate", "thm1"), ("natural", "prop34"), ("trivial", "thm1")],
)
def test_verify_theorem_passes(capsys, operator, theorem):
    code, data, _ = run_json(
        capsys, "verify-theorem", "--operator", operator, "--theorem", theorem, "--signature-size", "2"
    )
    assert code == 0
    assert data["status"] == "PASS"
    if operator == "moderate":
        assert all(g["holds"] for g in data["equivalences"][0]["groups"])


def test_verify_theorem_usage_errors(capsys):
    assert run(capsys, "verify-theorem", "--operator", "natural", "--theorem", "nope")[0] == 2
    assert run(capsys, "verify-theorem", "--operator", "natural", "--theorem", "prop34", "--signature-size", "3")[0] == 2


def test_verify_revision_theorem(capsys):
    code, data, _ = run_json(capsys, "verify-theorem", "--operator", "lex", "--theorem", "ir-lex")
    assert code == 0 and data["operator"] == "revise-lexicographic"


# ----------------------------------------------------------------- enumerate


@pytest.mark.parametrize("size, count", [(1, 3), (2, 75), (3, 545835)])
def test_enumerate_counts(capsys, size, count):
    code, out, _ = run(capsys, "enumerate", "--signature-size", str(size), "--count-only")
    assert code == 0
    assert int(out) == count


def test_enumerate_streams_json_lines(capsys):
    code, out, _ = run(capsys, "enumerate", "--signature-size", "1")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 3
    assert {(d["ranks"]["a"], d["ranks"]["-a"]) for d in lines} == {(0, 0), (0, 1), (1, 0)}
    assert all(d["signature"] == ["a"] for d in lines)


def test_enumerate_scope_overflow(capsys):
    assert run(capsys, "enumerate", "--signature-size", "4", "--count-only")[0] == 2


# ---------------------------------------------------------------- extras


def test_list_and_matrix(capsys):
    code, data, _ = run_json(capsys, "list")
    assert code == 0 and "thm1" in data["theorems"]
    code, out, _ = run(capsys, "matrix", "--postulates", "C1", "IND-C", "--revisions", "--markdown")
    assert code == 0
    assert out.splitlines()[0] == "| operator | C1 | IND-C |"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "belief_kernel", "enumerate", "--signature-size", "1", "--count-only"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "3"


def test_workers_environment_variable(tmp_path):
    env = {"BELIEF_KERNEL_WORKERS": "2", "PATH": "/usr/bin:/bin"}
    proc = subprocess.run(
        [sys.executable, "-m", "belief_kernel", "check", "--operator", "trivial", "--postulate", "IND-C-REL"],
        capture_output=True,
        text=True,
        env=env,
    )
    serial = subprocess.run(
        [sys.executable, "-m", "belief_kernel", "check", "--operator", "trivial", "--postulate", "IND-C-REL"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == serial.returncode == 1
    assert proc.stdout == serial.stdout
