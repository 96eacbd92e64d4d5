import json
import subprocess
import sys

import pytest

from echarpoly.document import DocumentError, TensorDocument


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "echarpoly.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc


def write_doc(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


DIAG4 = {"order": 4, "dim": 2, "entries": {"1,1,1,1": "1", "2,2,2,2": "1"}}
DIAG3 = {"order": 3, "dim": 2, "entries": {"1,1,1": "1", "2,2,2": "1"}}
DEFICIT = {
    "order": 3,
    "dim": 2,
    "entries": {
        "1,1,1": "2",
        "1,1,2": "2",
        "1,2,2": "1",
        "2,1,1": "1",
        "2,1,2": "1",
        "2,2,2": "3",
    },
}


def test_document_round_trip():
    doc = TensorDocument.from_json(json.dumps(DEFICIT))
    assert TensorDocument.from_json(doc.to_json()) == doc
    A = doc.to_hypermatrix()
    assert TensorDocument.from_hypermatrix(A) == doc


def test_document_canonicalizes_fractions():
    doc = TensorDocument.from_json(
        json.dumps({"order": 2, "dim": 2, "entries": {"1,1": "2/4", "2,2": "0"}})
    )
    assert doc.entries == (("1,1", "1/2"),)


def test_document_rejects_unknown_fields():
    with pytest.raises(DocumentError):
        TensorDocument.from_json(
            json.dumps({"order": 2, "dim": 2, "entries": {}, "extra": 1})
        )


@pytest.mark.parametrize(
    "payload",
    [
        {"order": 2, "dim": 2},
        {"order": 1, "dim": 2, "entries": {}},
        {"order": 2, "dim": 0, "entries": {}},
        {"order": 2, "dim": 2, "entries": {"1,1": "1.5"}},
        {"order": 2, "dim": 2, "entries": {"1,1": 1}},
        {"order": 2, "dim": 2, "entries": {"1": "1"}},
        {"order": 2, "dim": 2, "entries": {"1,3": "1"}},
        {"order": 2, "dim": 2, "entries": {"0,1": "1"}},
        {"order": "2", "dim": 2, "entries": {}},
        [1, 2],
    ],
)
def test_document_rejects_invalid(payload):
    with pytest.raises(DocumentError):
        TensorDocument.from_mapping(payload)


def test_document_one_based_boundary():
    doc = TensorDocument.from_json(json.dumps(DIAG3))
    A = doc.to_hypermatrix()
    assert A[(0, 0, 0)] == 1 and A[(1, 1, 1)] == 1


def test_cli_echar_golden_even(tmp_path):
    path = write_doc(tmp_path, "diag4.json", DIAG4)
    proc = run_cli("echar", path)
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["coefficients"] == ["1", "-6", "13", "-12", "4"]
    assert report["route"] == "sylvester-direct"
    assert report["a0_matches"] and report["leading_matches"]


def test_cli_echar_golden_odd(tmp_path):
    path = write_doc(tmp_path, "diag3.json", DIAG3)
    proc = run_cli("echar", path)
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["coefficients"] == ["1", "0", "-4", "0", "5", "0", "-2"]


def test_cli_echar_zero_tensor(tmp_path):
    path = write_doc(tmp_path, "zero.json", {"order": 3, "dim": 2, "entries": {}})
    proc = run_cli("echar", path)
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["identically_zero"] is True
    assert report["coefficients"] == []


def test_cli_echar_routes(tmp_path):
    path = write_doc(tmp_path, "diag4.json", DIAG4)
    for route in ("sylvester", "det", "macaulay"):
        proc = run_cli("echar", path, "--route", route)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["coefficients"] == ["1", "-6", "13", "-12", "4"]


def test_cli_eigen_deficit(tmp_path):
    path = write_doc(tmp_path, "deficit.json", DEFICIT)
    proc = run_cli("eigen", path)
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["normalized_count"] == 1
    assert report["deficit_count"] == 2
    kinds = sorted(row["kind"] for row in report["eigenpairs"])
    assert kinds == ["deficit", "deficit", "normalized"]


def test_cli_eigen_infinitely_many(tmp_path):
    path = write_doc(
        tmp_path,
        "inf.json",
        {"order": 3, "dim": 2, "entries": {"1,1,1": "1", "2,1,2": "1"}},
    )
    proc = run_cli("eigen", path)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["infinitely_many"] is True


def test_cli_parse_error_exit_1(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert run_cli("echar", str(path)).returncode == 1
    bad = write_doc(tmp_path, "bad.json", {"order": 2, "dim": 2, "entries": {"1,1": "0.5"}})
    assert run_cli("echar", bad).returncode == 1


def test_cli_unsupported_exit_2(tmp_path):
    path = write_doc(
        tmp_path, "dim5.json", {"order": 3, "dim": 5, "entries": {"1,1,1": "1"}}
    )
    assert run_cli("echar", path).returncode == 2
    path3 = write_doc(
        tmp_path, "dim3.json", {"order": 3, "dim": 3, "entries": {"1,1,1": "1"}}
    )
    assert run_cli("eigen", path3).returncode == 2
    # degenerate odd tensor cannot take the direct route on request
    diag3 = write_doc(tmp_path, "diag3.json", DIAG3)
    assert run_cli("echar", diag3, "--route", "sylvester").returncode == 2


def test_cli_verify_file_mode(tmp_path):
    path = write_doc(tmp_path, "deficit.json", DEFICIT)
    proc = run_cli("verify", path, "--deep")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["failures"] == []
    names = {v["check"] for v in report["verdicts"]}
    assert "constant-term" in names and "route-macaulay" in names
    assert "PASS constant-term" in proc.stderr


def test_cli_verify_fuzz_deterministic():
    a = run_cli("verify", "--fuzz", "3", "--seed", "9", "--m", "3")
    b = run_cli("verify", "--fuzz", "3", "--seed", "9", "--m", "3")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    c = run_cli("verify", "--fuzz", "3", "--seed", "10", "--m", "4")
    assert c.returncode == 0
    assert c.stdout != a.stdout


def test_cli_verify_requires_seed():
    proc = run_cli("verify", "--fuzz", "2")
    assert proc.returncode == 1


def test_cli_verify_rotation_invariance_line(tmp_path):
    path = write_doc(tmp_path, "diag4.json", DIAG4)
    proc = run_cli("verify", path)
    assert proc.returncode == 0
    assert "orthonormal-invariance-0" in proc.stderr


def test_cli_verify_fuzz_order4_batch():
    proc = run_cli("verify", "--fuzz", "100", "--seed", "42", "--m", "4", "--n", "2")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["failures"] == []
    assert report["verdicts"]["leading-coefficient"] == {"passed": 100, "ran": 100, "ok": True}
    assert report["verdicts"]["route-even-det"]["ok"]


def test_cli_verify_fuzz_order5_leading_law():
    # odd-order top coefficient -(P^2+Q^2)^(m-2) holds across the batch
    proc = run_cli("verify", "--fuzz", "50", "--seed", "7", "--m", "5", "--n", "2")
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["verdicts"]["leading-coefficient"] == {"passed": 50, "ran": 50, "ok": True}
    assert report["failures"] == []
