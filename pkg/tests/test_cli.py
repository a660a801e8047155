import json
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).parent.parent
CORPUS = ROOT / "corpus"


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "dblnerve.cli", *args],
        capture_output=True,
        text=True,
        cwd=ROOT,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_validate_ok():
    code, out, _ = run_cli("validate", str(CORPUS / "free-square.json"))
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_validate_missing_file_exits_2():
    code, _out, err = run_cli("validate", str(CORPUS / "nope.json"))
    assert code == 2
    assert "error" in err


def test_fibrancy_counterexample_exit_one():
    code, out, _ = run_cli("fibrancy", str(CORPUS / "h-iso.json"))
    assert code == 1
    report = json.loads(out)
    assert report["fibrant_nerve"] is False
    assert len(report["counterexample"]) == 3


def test_fibrancy_true_exit_zero():
    code, out, _ = run_cli("fibrancy", str(CORPUS / "hsim-iso.json"))
    assert code == 0
    assert json.loads(out)["fibrant_nerve"] is True


def test_nerve_compare():
    code, out, _ = run_cli(
        "nerve", str(CORPUS / "free-square.json"), "--m", "1", "--k", "1", "--n", "0", "--compare"
    )
    assert code == 0
    report = json.loads(out)
    assert report["count"] == report["oracle_count"] == 9
    assert report["oracle_agrees"] is True


def test_nerve2_counts():
    code, out, _ = run_cli(
        "nerve2", str(CORPUS / "iso.json"), "--variant", "hsim",
        "--m", "0", "--k", "1", "--n", "0",
    )
    assert code == 0
    assert json.loads(out)["count"] == 4
    code, out, _ = run_cli(
        "nerve2", str(CORPUS / "iso.json"), "--variant", "h",
        "--m", "0", "--k", "1", "--n", "0", "--compare-retract",
    )
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 2 and report["retract"] is True


def test_whi_check_square():
    code, out, _ = run_cli("whi-check", str(CORPUS / "free-square.json"), "--square", "s")
    assert code == 1
    assert json.loads(out)["whi"] is False


def test_weak_inverse_command():
    # pick an identity square of the equivalence embedding and identity data
    from dblnerve.io import load_path
    from dblnerve.whi import horizontal_equivalences

    dbl = load_path(str(CORPUS / "hsim-iso.json"))
    alpha = dbl.i_sq[sorted(dbl.vmors)[0]]
    top = next(
        d for d in horizontal_equivalences(dbl)
        if d.adjoint and d.f == dbl.stop[alpha]
    )
    bottom = next(
        d for d in horizontal_equivalences(dbl)
        if d.adjoint and d.f == dbl.sbottom[alpha]
    )
    payload = json.dumps({"top": list(top.as_tuple()), "bottom": list(bottom.as_tuple())})
    code, out, _ = run_cli(
        "weak-inverse", str(CORPUS / "hsim-iso.json"), "--square", alpha, "--data", payload
    )
    assert code == 0
    assert json.loads(out)["weak_inverse"] == alpha


def test_rlp_cross_check():
    code, out, _ = run_cli(
        "rlp", str(CORPUS / "free-square.json"), str(CORPUS / "point-double.json"),
        str(CORPUS / "square-to-point.map.json"), "--set", "I",
    )
    assert code == 1
    report = json.loads(out)
    assert report["rlp"]["I1"] is True
    assert report["rlp"]["I2"] is False


def test_dbl_bieq_inclusion():
    code, out, _ = run_cli(
        "dbl-bieq", str(CORPUS / "h-iso.json"), str(CORPUS / "hsim-iso.json"),
        str(CORPUS / "h-iso-to-hsim.map.json"),
    )
    assert code == 0
    assert json.loads(out)["double_biequivalence"] is True


def test_segal_command():
    code, out, _ = run_cli("segal", str(CORPUS / "h-iso.json"), "--k", "2")
    assert code == 0


def test_shapes_emit_round_trips():
    code, out, _ = run_cli("shapes", "emit", "--family", "inverted", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "two-category"
    from dblnerve.io import load_document

    cat = load_document(doc)
    assert len(cat.objects) == 3


def test_reports_are_byte_stable():
    args = ("nerve", str(CORPUS / "hsim-iso.json"), "--m", "0", "--k", "1", "--n", "1", "--list")
    _, first, _ = run_cli(*args)
    _, second, _ = run_cli(*args)
    assert first == second
