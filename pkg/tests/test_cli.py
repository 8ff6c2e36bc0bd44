import json

import numpy as np
import pytest

from hypermat.cli import main
from hypermat.recursions import catalog


def write_doc(path, doc):
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def f1_document(x=(0.0, 0.0), y=(0.0, 0.0)):
    return {
        "kind": "F1",
        "order": 2,
        "matrices": {
            "A": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.5, 0.0]]],
            "B": [[[0.8, 0.1], [0.0, 0.0]], [[0.0, 0.0], [1.1, 0.0]]],
            "Bp": [[[1.2, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.9, 0.0]]],
            "C": [[[2.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [2.5, 0.0]]],
        },
        "point": {"x": list(x), "y": list(y)},
    }


def gauss_document(x=(0.5, 0.0)):
    return {
        "kind": "2F1",
        "order": 1,
        "matrices": {
            "A": [[[1.0, 0.0]]],
            "B": [[[1.0, 0.0]]],
            "C": [[[2.0, 0.0]]],
        },
        "point": {"x": list(x)},
    }


def test_eval_identity_at_origin(tmp_path, capsys):
    path = write_doc(tmp_path / "doc.json", f1_document())
    code = main(["eval", path])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out["converged"] is True
    value = np.array([[complex(*pair) for pair in row] for row in out["value"]])
    assert np.array_equal(value, np.eye(2))


def test_eval_closed_form(tmp_path, capsys):
    path = write_doc(tmp_path / "doc.json", gauss_document())
    code = main(["eval", path])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert abs(out["value"][0][0][0] - 1.3862943611198906) <= 1e-10


def test_eval_malformed_entry_is_positioned(tmp_path, capsys):
    doc = f1_document()
    doc["matrices"]["A"][0][1] = [1]
    path = write_doc(tmp_path / "doc.json", doc)
    code = main(["eval", path])
    err = capsys.readouterr().err
    assert code == 1
    assert "matrices.A[0][1]" in err


def test_eval_domain_violation_exit_two(tmp_path, capsys):
    doc = {
        "kind": "F2",
        "order": 1,
        "matrices": {
            "A": [[[1.0, 0.0]]],
            "B": [[[1.0, 0.0]]],
            "Bp": [[[1.0, 0.0]]],
            "C": [[[2.0, 0.0]]],
            "Cp": [[[2.0, 0.0]]],
        },
        "point": {"x": [0.6, 0.0], "y": [0.5, 0.0]},
    }
    path = write_doc(tmp_path / "doc.json", doc)
    code = main(["eval", path])
    assert code == 2
    assert "domain" in capsys.readouterr().err


def test_eval_nonconvergence_exit_three(tmp_path, capsys):
    path = write_doc(tmp_path / "doc.json", gauss_document(x=(0.95, 0.0)))
    code = main(["eval", path, "--max-degree", "10"])
    assert code == 3
    assert "converge" in capsys.readouterr().err


def test_eval_kind_mismatch(tmp_path, capsys):
    path = write_doc(tmp_path / "doc.json", gauss_document())
    code = main(["eval", path, "--kind", "F4"])
    assert code == 1
    capsys.readouterr()


def test_eval_echo_round_trip(tmp_path, capsys):
    original = f1_document(x=(0.21, -0.03), y=(0.11, 0.07))
    path = write_doc(tmp_path / "doc.json", original)
    code = main(["eval", path, "--echo"])
    assert code == 0
    echoed = json.loads(capsys.readouterr().out)["input"]
    # Echo reparses to bit-identical matrices and point.
    round_tripped = write_doc(tmp_path / "echo.json", echoed)
    code = main(["eval", round_tripped, "--echo"])
    assert code == 0
    second = json.loads(capsys.readouterr().out)["input"]
    assert second == echoed
    assert echoed["matrices"] == original["matrices"]


def test_verify_unknown_id(tmp_path, capsys):
    code = main(["verify", "--ids", "nope", "--trials", "1"])
    err = capsys.readouterr().err
    assert code == 1
    assert "G-A+s-sum" in err  # the valid ids are listed


def test_verify_writes_deterministic_reports(tmp_path, capsys):
    args = [
        "verify",
        "--ids",
        "G-A+s-sum,F1-Bp-s-binom",
        "--trials",
        "2",
        "--seed",
        "11",
    ]
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["--out", str(first)]) == 0
    assert main(args + ["--out", str(second)]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()
    doc = json.loads(first.read_text())
    assert doc["summary"] == {"total": 4, "passed": 4, "failed": 0}
    assert [row["id"] for row in doc["results"]] == sorted(
        row["id"] for row in doc["results"]
    )
    for row in doc["results"]:
        assert row["passed"] is True
        assert row["residual"] <= 1e-8


def test_verify_stdout_report(capsys):
    code = main(["verify", "--ids", "G-A+1-contig", "--trials", "1", "--seed", "2"])
    captured = capsys.readouterr()
    assert code == 0
    doc = json.loads(captured.out)
    assert doc["summary"]["failed"] == 0
    assert "worst residual" in captured.err


def test_list_prints_whole_catalog(capsys):
    code = main(["list"])
    out = capsys.readouterr().out
    assert code == 0
    lines = [line for line in out.splitlines() if line.strip()]
    assert len(lines) == len(catalog()) + 1  # header row
    assert "F1-C-s-sum" in out
    assert "hypotheses" in lines[0]


def test_list_is_stable(capsys):
    main(["list"])
    first = capsys.readouterr().out
    main(["list"])
    second = capsys.readouterr().out
    assert first == second
