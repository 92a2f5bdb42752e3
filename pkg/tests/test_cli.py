import json

import pytest
from click.testing import CliRunner

from orbilat.cli import main
from orbilat.records.schemas import IsometryDoc, LatticeDoc


@pytest.fixture
def runner():
    return CliRunner()


def _invoke(runner, *args):
    return runner.invoke(main, ["--log-level", "ERROR", *args])


def _write(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


def test_construct_variant_b(runner, tmp_path):
    """Test : construction B de <1^6> sur Z_3."""
    code = _write(tmp_path / "code.json", {"p": 3, "generators": [[1, 1, 1, 1, 1, 1]]})
    out = tmp_path / "lattice.json"
    result = _invoke(runner, "construct", "--p", "3", "--code", code, "--out", str(out))
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["command"] == "construct"
    assert report["result"]["rank"] == 12
    assert report["result"]["discriminant"] == "Z_3^6"
    assert report["result"]["even"] is True
    assert report["result"]["rootless"] is True
    assert LatticeDoc.model_validate_json(out.read_text()).to_lattice().rank == 12


def test_construct_variant_a_not_even(runner, tmp_path):
    code = _write(tmp_path / "code.json", {"p": 3, "length": 3, "generators": [[1, 1, 0]]})
    result = _invoke(runner, "construct", "--p", "3", "--code", code, "--variant", "A")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["result"]["even"] is False
    assert report["result"]["self_orthogonal"] is False


def test_construct_input_errors(runner, tmp_path):
    result = _invoke(runner, "construct", "--p", "3", "--code", str(tmp_path / "missing.json"))
    assert result.exit_code == 2
    code = _write(tmp_path / "code.json", {"p": 3, "generators": [[1, 1, 1]]})
    result = _invoke(runner, "construct", "--p", "4", "--code", code)
    assert result.exit_code == 2
    result = _invoke(runner, "construct", "--p", "5", "--code", code)
    assert result.exit_code == 2
    assert "disagrees" in result.output


def test_check_extra_on_construction_b(runner, tmp_path, lb_3b):
    _, lattice, g = lb_3b
    lat = tmp_path / "lattice.json"
    lat.write_text(LatticeDoc.from_lattice(lattice).model_dump_json())
    iso = _write(tmp_path / "g.json", {"matrix": IsometryDoc.from_isometry(g).matrix})
    out = tmp_path / "verdict.json"
    result = _invoke(runner, "check-extra", "--lattice", str(lat), "--isometry", iso, "--out", str(out))
    assert result.exit_code == 0, result.output
    verdict = json.loads(out.read_text())
    assert verdict["has_extra"] is True
    assert verdict["branch"] == "B-construction(p odd)"


def test_check_extra_rejects_roots(runner, tmp_path, a2, a2_coxeter):
    lat = tmp_path / "a2.json"
    lat.write_text(LatticeDoc.from_lattice(a2).model_dump_json())
    iso = _write(tmp_path / "g.json", {"matrix": [list(r) for r in a2_coxeter.matrix]})
    result = _invoke(runner, "check-extra", "--lattice", str(lat), "--isometry", iso)
    assert result.exit_code == 2
    assert "lattice has roots" in result.output


def test_check_extra_bad_isometry(runner, tmp_path, a2):
    lat = tmp_path / "a2.json"
    lat.write_text(LatticeDoc.from_lattice(a2).model_dump_json())
    iso = _write(tmp_path / "g.json", {"matrix": [[1, 0], [0, 2]]})
    result = _invoke(runner, "check-extra", "--lattice", str(lat), "--isometry", iso)
    assert result.exit_code == 2


def test_classify_codes(runner):
    result = _invoke(runner, "classify-codes", "--p", "7", "--t", "3", "--dim", "1")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["result"]["classes"] == 1
    assert report["result"]["representatives"][0]["p"] == 7


def test_classify_codes_invalid_input(runner):
    assert _invoke(runner, "classify-codes", "--p", "6", "--t", "3", "--dim", "1").exit_code == 2
    assert _invoke(runner, "classify-codes", "--p", "3", "--t", "3", "--dim", "4").exit_code == 2


def test_verify_triality(runner):
    result = _invoke(runner, "verify-triality", "--k", "3")
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["result"]["passed"] is True
    assert report["result"]["identities"]["Z^-1 G Z = F"] is True
    assert _invoke(runner, "verify-triality", "--k", "1").exit_code == 2


def test_verify_paper_table2(runner, tmp_path):
    """Test la suite table2 : matrice de résultats et rapport JSON."""
    out = tmp_path / "report.json"
    result = _invoke(runner, "--seed", "0x10", "verify-paper", "--suite", "table2", "--out", str(out))
    assert result.exit_code == 0, result.output
    assert "table2:p=3" in result.stdout
    assert "passed=6" in result.stdout
    report = json.loads(out.read_text())
    assert report["seed"] == 16
    assert report["result"]["passed"] is True


def test_verify_paper_list_and_only(runner):
    result = _invoke(runner, "verify-paper", "--suite", "triality", "--list")
    assert result.exit_code == 0
    assert result.stdout.split() == [f"triality:k={k}" for k in range(2, 10)]
    result = _invoke(runner, "verify-paper", "--suite", "triality", "--only", "triality:k=4")
    assert result.exit_code == 0, result.output
    assert "passed=1" in result.stdout
    result = _invoke(runner, "verify-paper", "--suite", "triality", "--only", "triality:k=40")
    assert result.exit_code == 2


def test_verify_paper_budget_exhausted(runner):
    result = _invoke(runner, "verify-paper", "--suite", "uniqueC", "--budget", "0.001")
    assert result.exit_code == 3
    assert "skipped" in result.stdout


def test_unknown_suite(runner):
    assert _invoke(runner, "verify-paper", "--suite", "nope").exit_code == 2
