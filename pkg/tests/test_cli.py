from __future__ import annotations

import json
from pathlib import Path

import pytest

from cotoeplitz.cli import main
from cotoeplitz.coalgebra import EgNode, SUq2Instance
from cotoeplitz.coalgebra.cosymbol import to_json
from cotoeplitz.operators.matrix import OperatorMatrix, TruncationSpec
from cotoeplitz.suq2.algebra import symbol_from_text
from cotoeplitz.suq2.form import WeightFunction


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_of_preservation_symbol(capsys) -> None:
    code, out, _ = run(capsys, "matrix", "--symbol", "0,1,1", "--trunc", "4")
    assert code == 0
    data = json.loads(out)
    assert data["entries"] and all(e["row"] == e["col"] for e in data["entries"])
    basis = SUq2Instance(WeightFunction.one()).p_basis(4)
    assert OperatorMatrix.from_json(data, basis).trunc == TruncationSpec(4)


def test_matrix_of_vanishing_symbol(capsys) -> None:
    code, out, _ = run(capsys, "matrix", "--symbol", "C", "--trunc", "4")
    assert code == 0
    assert json.loads(out)["entries"] == []


def test_matrix_specialized_and_csv(capsys, tmp_path: Path) -> None:
    code, out, _ = run(capsys, "matrix", "--symbol", "a", "--trunc", "2", "--q", "1/2")
    assert code == 0
    assert json.loads(out)["specialized"]["q"] == "1/2"
    target = tmp_path / "a.csv"
    code, _, _ = run(capsys, "matrix", "--symbol", "a", "--trunc", "2", "--q", "1/2", "--format", "csv", "-o", str(target))
    assert code == 0
    assert target.read_text().splitlines()[0] == "row,col,re,im"


def test_matrix_from_cosymbol_file(capsys, tmp_path: Path) -> None:
    path = tmp_path / "lam.json"
    path.write_text(json.dumps(to_json(EgNode(symbol_from_text("a")))))
    _, from_file, _ = run(capsys, "matrix", "--cosymbol", str(path), "--trunc", "3")
    _, direct, _ = run(capsys, "matrix", "--symbol", "a", "--trunc", "3")
    assert from_file == direct
    code, out, _ = run(capsys, "matrix", "--cosymbol", "counit", "--trunc", "2")
    assert code == 0 and len(json.loads(out)["entries"]) == 6


@pytest.mark.parametrize(
    "argv",
    [
        ["matrix", "--symbol", "a", "--q", "0"],
        ["matrix", "--symbol", "a", "--q", "abc"],
        ["matrix", "--symbol", "a", "--trunc", "0"],
        ["matrix", "--symbol", "x"],
        ["matrix"],
        ["matrix", "--symbol", "a", "--cosymbol", "counit"],
        ["matrix", "--symbol", "a", "--format", "csv"],
        ["matrix", "--cosymbol", "/nonexistent.json"],
        ["matrix", "--symbol", "a", "--weight", "/nonexistent.txt"],
        ["verify", "no-such-suite"],
        ["verify", "rewrite", "--q=-1/2"],
        ["relations", "/nonexistent.txt"],
    ],
)
def test_usage_errors_exit_2(capsys, argv: list[str]) -> None:
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("cotoeplitz: error:")


def test_verify_suite_is_deterministic(capsys) -> None:
    code, first, _ = run(capsys, "verify", "cosymbols", "--seed", "3", "--trunc", "3")
    _, second, _ = run(capsys, "verify", "cosymbols", "--seed", "3", "--trunc", "3")
    assert code == 0
    assert first == second
    report = json.loads(first)
    assert report["ok"] and report["suite"] == "cosymbols"


def test_verify_special_cases_records_expected_failure(capsys) -> None:
    code, out, _ = run(capsys, "verify", "special-cases", "--trunc", "4")
    assert code == 0
    statuses = {c["status"] for s in json.loads(out)["suites"] for c in s["checks"]}
    assert "expected-failure" in statuses


def test_relations_file(capsys, tmp_path: Path) -> None:
    path = tmp_path / "rels.txt"
    path.write_text("# generators are normal-ordered words or k,l,m triples\nG[C]\nG[a]*G[c] - G[c]*G[a] - 1\nG[a]\n")
    code, out, _ = run(capsys, "relations", str(path), "--trunc", "4", "--hbar-sqrt", "0")
    assert code == 0
    rels = json.loads(out)["relations"]
    assert [r["verdict"] for r in rels] == ["candidate relation at this truncation", "violated", "violated"]
    assert rels[0]["class"] == "classical" and rels[0]["degree"] == 1
    assert rels[1]["class"] == "quantum"
    assert rels[1]["classical_part"] == rels[1]["deformed"] == "G[a]*G[c] - G[c]*G[a]"
    assert rels[2]["witness"] == {"row": [0, 1], "col": [0, 1], "value": "1"}


def test_relations_unknown_generator(capsys, tmp_path: Path) -> None:
    path = tmp_path / "rels.txt"
    path.write_text("G[xyz]\n")
    code, _, err = run(capsys, "relations", str(path))
    assert code == 2 and "G[xyz]" in err


def test_weight_file(capsys, tmp_path: Path) -> None:
    path = tmp_path / "w.txt"
    path.write_text("1 0 4\n")
    code, out, _ = run(capsys, "matrix", "--symbol", "a", "--trunc", "1", "--weight", str(path))
    assert code == 0
    entries = json.loads(out)["entries"]
    assert [(e["row"], e["col"]) for e in entries] == [([0, 1], [0, 1]), ([1, 0], [1, 0])]
    assert all(e["coeff"] == [{"qexp": 0, "re": [4, 1], "im": [0, 1]}] for e in entries)


def test_info(capsys) -> None:
    code, out, _ = run(capsys, "info", "--trunc", "5", "--subspace", "Pprime")
    assert code == 0
    data = json.loads(out)
    assert data["basis_size"] == 36
    assert "all" in data["suites"]
