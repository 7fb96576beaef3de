"""End-to-end command-line checks: output formats, JSON round-trips, and
the 0/1/2 exit-code contract."""

import json
import subprocess
import sys

import pytest

import braidrook.tensor as tensor_module
from braidrook.burau import BurauParams, generator_power
from braidrook.cli import main
from braidrook.diagrams import SetPartitionDiagram


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- burau -----------------------------------------------------------------


def test_burau_reduced_json(capsys):
    code, out, _ = run(capsys, "burau", "--n", "3", "--q1", "1", "--q2", "-2", "--reduced")
    assert code == 0
    data = json.loads(out)
    assert data["q"] == "2" and data["reduced"] is True
    assert data["generators"][0] == [["-2", "2"], ["0", "1"]]


def test_burau_power_matches_closed_form(capsys):
    code, out, _ = run(
        capsys, "burau", "--n", "3", "--q1", "2", "--q2", "3", "--reduced", "--power", "4"
    )
    assert code == 0
    data = json.loads(out)
    want = generator_power(2, 4, BurauParams(3, 2, 3))
    assert data["generators"][1] == [
        [str(want[i, j]) for j in range(2)] for i in range(2)
    ]


def test_burau_rejects_bad_power(capsys):
    code, _, err = run(capsys, "burau", "--n", "3", "--q1", "1", "--q2", "-2", "--power", "0")
    assert code == 2 and "power" in err


def test_burau_gate_is_usage_error(capsys):
    code, _, err = run(capsys, "burau", "--n", "3", "--q1", "1", "--q2", "-1")
    assert code == 2 and "root of unity" in err


# -- rook ------------------------------------------------------------------


def test_rook_enumerate_json(capsys):
    code, out, _ = run(capsys, "rook", "--r", "2", "enumerate")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 7 and len(data["diagrams"]) == 7
    for item in data["diagrams"]:
        SetPartitionDiagram.from_json(item)


def test_rook_enumerate_text(capsys):
    code, out, _ = run(capsys, "rook", "--r", "3", "enumerate", "--format", "text")
    assert code == 0
    assert out.strip().endswith("total 34")


def test_rook_enumerate_bound(capsys):
    code, _, err = run(capsys, "rook", "--r", "7", "enumerate")
    assert code == 2 and "bound" in err


def test_rook_present(capsys):
    code, out, _ = run(capsys, "rook", "--r", "2", "present", "--z", "3")
    assert code == 0
    data = json.loads(out)
    assert data["all_pass"] is True
    assert data["presentation"]["all_pass"] and data["rescaling"]["all_pass"]


def test_rook_present_degenerate_z(capsys):
    code, out, _ = run(capsys, "rook", "--r", "2", "present", "--z", "0")
    assert code == 0
    data = json.loads(out)
    assert data["presentation"]["degenerate_z"] is True
    assert data["rescaling"] == {"skipped": "z = 0"}


# -- dims ------------------------------------------------------------------


def test_dims_text_table(capsys):
    code, out, _ = run(capsys, "dims", "--r", "4")
    assert code == 0
    for r, total in enumerate([1, 2, 7, 34, 209]):
        assert f"r = {r}: sum of squares = {total}" in out


def test_dims_json(capsys):
    code, out, _ = run(capsys, "dims", "--r", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [row["sum_of_squares"] for row in data["rows"]] == [1, 2, 7, 34, 209]
    top = data["rows"][4]["cells"]
    assert {"k": 2, "partition": [1, 1], "dim": 6} in top


# -- bratteli ---------------------------------------------------------------


def test_bratteli_dot_leaves(capsys):
    code, out, _ = run(capsys, "bratteli", "--r", "3", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert '"L3_6"' in out and '"L3_7"' not in out
    assert 'label="2,1"' in out


def test_bratteli_text_and_json(capsys):
    code, out, _ = run(capsys, "bratteli", "--r", "2")
    assert code == 0 and "level 2: ()  1  2  1,1" in out
    code, out, _ = run(capsys, "bratteli", "--r", "2", "--format", "json")
    data = json.loads(out)
    assert data["path_counts"][-1] == [1, 2, 1, 1]
    assert data["rows"][2] == [[], [1], [2], [1, 1]]


# -- duality ----------------------------------------------------------------


def test_duality_text_passes(capsys):
    code, out, _ = run(capsys, "duality", "--n", "2", "--r", "2", "--q1", "1", "--q2", "-2")
    assert code == 0
    assert "identities hold" in out and "faithful=False" in out


def test_duality_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "duality", "--n", "3", "--r", "2", "--q1", "1", "--q2", "-2", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["all_pass"] is True and data["faithful"] is True and data["z"] == "7"
    assert json.dumps(data, indent=2) == out.strip()


def test_duality_budget_exit(capsys):
    code, _, err = run(capsys, "duality", "--n", "9", "--r", "9", "--q1", "1", "--q2", "-2")
    assert code == 2 and "budget" in err
    assert tensor_module.MATRIX_SIZE_BUDGET == 256


def test_duality_budget_override_restores(capsys):
    code, _, err = run(
        capsys,
        "duality", "--n", "2", "--r", "2", "--q1", "1", "--q2", "-2", "--budget", "3",
    )
    assert code == 2 and "exceeds budget 3" in err
    assert tensor_module.MATRIX_SIZE_BUDGET == 256


def test_duality_gate_exit(capsys):
    code, _, err = run(capsys, "duality", "--n", "2", "--r", "2", "--q1", "1", "--q2", "-1")
    assert code == 2 and "root of unity" in err


# -- lie ---------------------------------------------------------------------


def test_lie_text(capsys):
    code, out, _ = run(capsys, "lie", "--n", "4", "--q", "1/2", "--generators", "v")
    assert code == 0
    assert "closure dimension 8 (expected 8)" in out


def test_lie_json(capsys):
    code, out, _ = run(capsys, "lie", "--n", "3", "--q", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["closure_dim"] == 4 and data["ok"] is True


def test_lie_gate(capsys):
    code, _, err = run(capsys, "lie", "--n", "3", "--q", "1")
    assert code == 2 and "avoid" in err


# -- verify-all ---------------------------------------------------------------


FAST_CHECKS = (
    "dimension-table,rank-one-centralizer,degree-two-endomorphisms,"
    "classical-parameter,schur-dimensions,presentation-and-rescaling,"
    "tangent-closures"
)


def test_verify_all_subset_text(capsys):
    code, out, _ = run(capsys, "verify-all", "--only", FAST_CHECKS)
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("PASS")]
    assert len(lines) == 7
    assert all(l.startswith("PASS") for l in lines)


def test_verify_all_json_schema_and_round_trip(capsys):
    code, out, _ = run(capsys, "verify-all", "--json", "--only", "dimension-table")
    assert code == 0
    data = json.loads(out)
    assert data["suite"] == "verify-all"
    (check,) = data["checks"]
    assert set(check) == {"name", "paper_ref", "status", "detail"}
    assert check["status"] == "pass"
    assert json.dumps(data, indent=2) == out.strip()


def test_verify_all_unknown_name(capsys):
    code, _, err = run(capsys, "verify-all", "--only", "no-such-check")
    assert code == 2 and "unknown check names" in err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["duality", "--n", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_console_script_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "braidrook.cli", "dims", "--r", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "r = 2: sum of squares = 7" in proc.stdout
