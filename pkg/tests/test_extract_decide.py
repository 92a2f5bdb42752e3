from fractions import Fraction

import pytest

from orbilat.codes.catalog import catalog_code
from orbilat.codes.construction import construct_B, g_delta_e
from orbilat.codes.zp import CodeZp, dual_code, first_codeword_of_weight, monomial_equivalent
from orbilat.core.errors import DecompositionError, IsometryError, PreconditionError
from orbilat.lattice.core import discriminant_group
from orbilat.lattice.enumeration import is_rootless
from orbilat.lattice.isometry import LatticeIsometry, negation
from orbilat.lattice.roots import simple_roots
from orbilat.leech.coinvariant import coinvariant_class
from orbilat.orbifold.decide import decide_extra, stable_cosets
from orbilat.orbifold.extract import LatticeSummary, chab_extract, dual_weight_witness, span_with_coset
from orbilat.records.schemas import VerdictBranch
from orbilat.suites.table1 import check_row


def _row_pair(tag):
    row = catalog_code(tag)
    lattice = construct_B(row.context, row.code)
    e = first_codeword_of_weight(dual_code(row.code), row.t)
    return row, lattice, g_delta_e(row.context, e, lattice=lattice)


def test_extraction_recovers_code(lb_3b):
    """Test : le recollement par une racine redonne (C, e)."""
    ctx, lattice, g = lb_3b
    lam = ctx.embed(0, simple_roots(3)[0])
    extraction = chab_extract(lattice, g, lam)
    assert extraction.ok, extraction.checks
    assert monomial_equivalent(extraction.code, catalog_code("3B").code) is not None
    assert len(extraction.e) == 6 and all(extraction.e)
    assert dual_weight_witness(extraction.code) is not None
    assert len(extraction.base) == 6
    assert span_with_coset(lattice, lam).rank == 12


@pytest.mark.parametrize("block, sign", [(0, 1), (0, -1), (4, 1)])
def test_extraction_frame_matches_rotation(lb_3b, block, sign):
    ctx, lattice, g = lb_3b
    lam = tuple(sign * x for x in ctx.embed(block, simple_roots(3)[1]))
    extraction = chab_extract(lattice, g, lam)
    assert extraction.checks["e_in_dual_code"]
    assert extraction.checks["image_is_L_B"]
    assert extraction.ok
    assert len(extraction.e) == 6 and all(extraction.e)


def test_extraction_preconditions(lb_3b, e8):
    ctx, lattice, g = lb_3b
    half_root = tuple(Fraction(x, 2) for x in ctx.embed(0, simple_roots(3)[0]))
    with pytest.raises(PreconditionError, match="pλ"):
        chab_extract(lattice, g, half_root)
    with pytest.raises(PreconditionError, match="rational span"):
        chab_extract(lattice, g, ctx.embed(0, (1, 0, 0)))
    scaled = e8.scaled(2)
    with pytest.raises(PreconditionError, match="odd prime"):
        chab_extract(scaled, negation(scaled), [0] * 12)


def test_lattice_summary(lb_3b):
    summary = LatticeSummary.of(lb_3b[1])
    assert summary.rank == 12
    assert summary.discriminant == "Z_3^6"
    assert summary.even and summary.rootless


def test_decide_on_3b():
    _, lattice, g = _row_pair("3B")
    verdict = decide_extra(lattice, g)
    assert verdict.has_extra
    assert verdict.branch == VerdictBranch.B_CONSTRUCTION_ODD
    assert verdict.witness["t"] == 6
    assert all(verdict.witness["dual_word"])


def _root_cosets(lattice, g, p):
    for coeffs, lam in stable_cosets(lattice, g, p):
        try:
            yield coeffs, chab_extract(lattice, g, lam, check_rootless=False)
        except PreconditionError:
            continue


@pytest.mark.slow
@pytest.mark.parametrize("tag", ["3B", "3C", "5B", "5C", "7B"])
def test_decide_on_catalog_rows(tag):
    row, lattice, g = _row_pair(tag)
    verdict = decide_extra(lattice, g)
    assert verdict.branch == VerdictBranch.B_CONSTRUCTION_ODD
    extracted = CodeZp.from_generators(row.p, verdict.witness["code"], verdict.witness["t"])
    assert monomial_equivalent(extracted, row.code) is not None
    _, extraction = next(_root_cosets(lattice, g, row.p))
    assert extraction.ok, extraction.checks
    assert monomial_equivalent(extraction.code, row.code) is not None


@pytest.mark.slow
@pytest.mark.parametrize("tag", ["3B", "3C", "5B", "5C", "7B"])
def test_catalog_suite_rows(tag):
    outcome = check_row(catalog_code(tag))
    assert outcome.passed, outcome.data["report"]
    assert outcome.data["report"]["round_trip"]


@pytest.mark.slow
def test_every_root_coset_of_lb_3b_is_read_consistently(lb_3b):
    _, lattice, g = lb_3b
    found = 0
    for coeffs, extraction in _root_cosets(lattice, g, 3):
        found += 1
        assert extraction.checks["e_in_dual_code"], coeffs
        assert extraction.checks["image_is_L_B"], coeffs
    assert found > 0


@pytest.mark.slow
@pytest.mark.parametrize("tag", ["3B", "5B", "7B"])
def test_every_root_coset_of_coinvariant_is_read_consistently(tag):
    """Test : chaque classe porteuse de racines de Λ_h redonne (C, e) avec e dans C^⊥ et L = L_B(C)."""
    cc = coinvariant_class(tag)
    expected = catalog_code(tag).code
    found = 0
    for coeffs, extraction in _root_cosets(cc.lattice, cc.isometry, cc.p):
        found += 1
        assert extraction.checks["e_in_dual_code"], (coeffs, extraction.e)
        assert extraction.checks["image_is_L_B"], coeffs
        assert extraction.ok, extraction.checks
        assert monomial_equivalent(extraction.code, expected) is not None
    assert found > 0


def test_index_three_control_lattice(lb_3b, perturbed_3b):
    _, lattice, _ = lb_3b
    _, sub, h = perturbed_3b
    assert sub.rank == 12
    assert sub.determinant == 9 * lattice.determinant
    assert sub.is_even() and is_rootless(sub)
    assert "Z_9" in discriminant_group(sub).label()
    assert h.order == 3


@pytest.mark.slow
def test_decide_control_on_index_three_sublattice(perturbed_3b):
    """Test : aucune classe stable du sous-réseau ne redonne une construction B."""
    _, sub, h = perturbed_3b
    for coeffs, lam in stable_cosets(sub, h, 3):
        try:
            extraction = chab_extract(sub, h, lam, check_rootless=False)
        except (PreconditionError, DecompositionError):
            continue
        assert not extraction.ok, coeffs
    verdict = decide_extra(sub, h)
    assert not verdict.has_extra
    assert verdict.branch == VerdictBranch.NONE
    assert verdict.witness["p"] == 3


def test_decide_binary_branch(e8):
    scaled = e8.scaled(2)
    verdict = decide_extra(scaled, negation(scaled))
    assert verdict.has_extra
    assert verdict.branch == VerdictBranch.B_CONSTRUCTION_2
    assert verdict.witness["coset_roots"] == 16


def test_decide_rejects_bad_input(a2, a2_coxeter):
    with pytest.raises(PreconditionError, match="lattice has roots"):
        decide_extra(a2, a2_coxeter)
    with pytest.raises(IsometryError):
        decide_extra(a2, LatticeIsometry.identity(a2))
    with pytest.raises(PreconditionError, match="not even"):
        odd = a2.scaled(Fraction(1, 2))
        decide_extra(odd, LatticeIsometry.from_matrix(odd, a2_coxeter.matrix))
