import json

import pytest

from symkron.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


@pytest.fixture(autouse=True)
def _restore(fresh_config):
    yield


def test_scalar_commands(capsys):
    assert run(capsys, "sm", "1^2", "--n", "12")[:2] == (0, "0")
    assert run(capsys, "kron", "2,1", "2,1", "2,1")[:2] == (0, "1")
    assert run(capsys, "char", "2,1", "3")[:2] == (0, "-1")
    assert run(capsys, "sk", "1^4", "2,2")[:2] == (0, "0")
    assert run(capsys, "ak", "1^4", "2,2")[:2] == (0, "1")
    assert run(capsys, "kostka", "2,1", "1,1,1")[:2] == (0, "2")
    assert run(capsys, "am", "1^5", "--n", "12")[:2] == (0, "0")
    assert run(capsys, "plethysm", "2,2", "--d", "2", "--m", "2")[:2] == (0, "1")


def test_plethysm_expansion(capsys):
    code, out, _ = run(capsys, "plethysm", "--d", "2", "--m", "2")
    assert code == 0 and json.loads(out)["schur"] == {"4": 1, "2,2": 1}


def test_construct(capsys):
    code, out, _ = run(capsys, "construct-selfconj", "4", "--sign", "-")
    assert code == 0 and json.loads(out)["partition"] == "2,2"
    code, _, err = run(capsys, "construct-selfconj", "2", "--sign", "+")
    assert code == 2 and "X_s" in err


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "4,4,4")
    doc = json.loads(out)
    assert code == 0 and doc["verified"] and doc["status"] == "certified"
    code, out, _ = run(capsys, "certify", "2,1,1", "--ell", "7")
    assert code == 1 and json.loads(out)["reason"] == "exceptional"


def test_scan(capsys):
    code, out, _ = run(capsys, "scan-exceptional", "--max-a", "14")
    doc = json.loads(out)
    assert code == 0 and doc["X_s"] == [2, 3, 4, 7, 8, 12] and doc["X_a"] == [1, 2, 5, 6, 10, 14]


def test_small_values_exit_tracks_mismatches(capsys):
    code, out, _ = run(capsys, "reproduce-small-values", "--cap", "3")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "reproduce-small-values", "--cap", "5")
    assert code == 1 and json.loads(out)["mismatches"] == ["2,1,1,1"]


def test_stabilizer(capsys):
    code, out, _ = run(capsys, "stabilizer", "--n", "3", "--m", "3", "--trials", "1")
    doc = json.loads(out)
    assert code == 0 and doc["annihilator_dimension"] == 8 and doc["invariant_dimension"] == 3


def test_verify_paper(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify-paper", "--level", "quick", "--output", str(target))
    doc = json.loads(out)
    assert json.loads(target.read_text()) == doc
    assert code == (1 if doc["body"]["summary"]["failed"] else 0)


def test_usage_errors(capsys):
    assert run(capsys, "kron", "2,1", "3")[0] == 2
    assert run(capsys, "sm", "x,y", "--n", "3")[0] == 2
    assert run(capsys, "construct-selfconj", "3", "--sign", "0")[0] == 2
    assert run(capsys, "kron", "2", "1,1,1", "2,1")[0] == 2


def test_weight_cap_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("KF_MAX_WEIGHT", "100")
    assert run(capsys, "--max-weight", "3", "sm", "2,2", "--n", "4")[0] == 2
    assert run(capsys, "sm", "2,2", "--n", "4", "--max-weight", "4")[0] == 0


def test_version(capsys):
    assert main(["--version"]) == 0
