from fractions import Fraction

import pytest
from pydantic import ValidationError

from orbilat.codes.zp import CodeZp
from orbilat.core.errors import InputError
from orbilat.records.schemas import (
    BundleDoc,
    CheckRecord,
    CheckStatus,
    CodeDoc,
    ExtraAutVerdict,
    IsometryDoc,
    LatticeDoc,
    ReportDocument,
    VerdictBranch,
    load_document,
    to_jsonable,
)


def test_rational_strings():
    """Test : les rationnels sont des chaînes exactes, jamais des décimaux."""
    doc = LatticeDoc(ambient_dim=2, basis=[["1/2", 3], ["-4/6", "0"]])
    assert doc.basis == [["1/2", "3"], ["-2/3", "0"]]
    with pytest.raises(ValidationError):
        LatticeDoc(ambient_dim=1, basis=[["0.5"]])
    with pytest.raises(ValidationError):
        LatticeDoc(ambient_dim=1, basis=[[True]])
    with pytest.raises(ValidationError):
        LatticeDoc(ambient_dim=1, basis=[["1/0"]])


def test_lattice_doc_shape():
    with pytest.raises(ValidationError):
        LatticeDoc(ambient_dim=3, basis=[["1", "0"]])
    with pytest.raises(ValidationError):
        LatticeDoc(ambient_dim=1, inner_scale="-1", basis=[["1"]])
    with pytest.raises(ValidationError):
        LatticeDoc(ambient_dim=1, basis=[["1"]], extra="x")


def test_lattice_doc_round_trip(e8):
    doc = LatticeDoc.from_lattice(e8)
    again = LatticeDoc.model_validate_json(doc.model_dump_json())
    assert again.to_lattice() == e8


def test_isometry_doc_with_non_canonical_basis(a2, a2_coxeter):
    """Test : la matrice est lue dans la base du document, pas la base canonique."""
    basis = [["1", "-1", "0"], ["1", "0", "-1"]]
    # g(b1) = e1 - e2 = b2 - b1 ; g(b2) = e1 - e0 = -b1
    doc = IsometryDoc(lattice=LatticeDoc(ambient_dim=3, basis=basis), matrix=[[-1, 1], [-1, 0]])
    g = doc.to_isometry()
    assert g.lattice == a2
    assert g == a2_coxeter
    assert IsometryDoc.from_isometry(g).to_isometry() == g
    with pytest.raises(ValidationError):
        IsometryDoc(lattice=LatticeDoc(ambient_dim=3, basis=basis), matrix=[[1]])


def test_code_and_bundle_docs():
    code = CodeDoc(p=5, length=4, generators=[[1, 1, 2, 2]]).to_code()
    assert code == CodeZp.from_generators(5, [[1, 1, 2, 2]])
    assert CodeDoc.from_code(code).generators == [[1, 1, 2, 2]]
    with pytest.raises(ValidationError):
        CodeDoc(p=4, length=2)
    bundle = BundleDoc(p=3, t=3, code=[[1, 1, 1]], e=[4, 1, -1])
    assert bundle.word() == (1, 1, 2)
    assert bundle.context().t == 3
    with pytest.raises(ValidationError):
        BundleDoc(p=3, t=3, e=[1, 1])


def test_verdict_branch_consistency():
    verdict = ExtraAutVerdict(has_extra=True, branch=VerdictBranch.LEECH_11A, witness={"x": Fraction(1, 3)})
    assert verdict.witness == {"x": "1/3"}
    with pytest.raises(ValidationError):
        ExtraAutVerdict(has_extra=True, branch=VerdictBranch.NONE)
    with pytest.raises(ValidationError):
        ExtraAutVerdict(has_extra=False, branch=VerdictBranch.B_CONSTRUCTION_2)


def test_report_summary():
    report = ReportDocument(
        command="verify-paper",
        inputs={"suite": "table2"},
        checks=[
            CheckRecord(name="a", status=CheckStatus.PASSED),
            CheckRecord(name="b", status=CheckStatus.SKIPPED),
            CheckRecord(name="c", status=CheckStatus.FAILED, data={"n": (1, 2)}),
        ],
    )
    assert report.summary == {"passed": 1, "failed": 1, "error": 0, "skipped": 1}
    assert not report.passed
    assert report.checks[2].data == {"n": [1, 2]}
    assert '"schema_version": "1.0"' in report.dump()


def test_to_jsonable():
    code = CodeZp.from_generators(3, [[1, 1, 1]])
    assert to_jsonable({"code": code, "s": {2, 1}}) == {
        "code": {"p": 3, "length": 3, "generators": [[1, 1, 1]]},
        "s": [1, 2],
    }
    assert to_jsonable(CheckStatus.ERROR) == "error"


def test_load_document_errors():
    with pytest.raises(InputError, match="LatticeDoc"):
        load_document(LatticeDoc, {"ambient_dim": 0, "basis": []})
    assert load_document(CodeDoc, {"p": 3, "length": 2}).generators == []
