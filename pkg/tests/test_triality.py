import pytest

from orbilat.core.errors import InputError
from orbilat.exact.cyclotomic import cmat_equal, cmat_identity, cmat_mul
from orbilat.triality import (
    Conjugation,
    build_FGZ,
    conjugation_order,
    conjugation_report,
    matrix_unit,
    sfg_report,
    traceless_basis,
    verify_conjugation_relations,
    verify_root_space_permutation,
    verify_sfg,
    verify_weight_grading,
)


@pytest.mark.parametrize("k", range(2, 10))
def test_sfg_relations(k):
    """Test les relations entre F, G et Z en arithmétique cyclotomique exacte."""
    report = sfg_report(k)
    assert all(report.values()), report
    assert verify_sfg(k)


@pytest.mark.parametrize("k", range(2, 10))
def test_conjugation_relations(k):
    report = conjugation_report(k)
    assert all(report.values()), report
    assert verify_conjugation_relations(k)


@pytest.mark.parametrize("k", [2, 3, 5, 6])
def test_weight_grading_and_root_spaces(k):
    assert verify_weight_grading(k)
    assert verify_root_space_permutation(k)


def test_matrices_are_invertible():
    mats = build_FGZ(4)
    ident = cmat_identity(4, 4)
    assert cmat_equal(cmat_mul(mats.F, mats.F_inv), ident)
    assert cmat_equal(cmat_mul(mats.G, mats.G_inv), ident)
    F, G, Z0 = mats
    assert F is mats.F and Z0 is mats.Z0


def test_traceless_basis_size():
    assert len(traceless_basis(3)) == 8
    assert len(traceless_basis(5)) == 24


def test_conjugation_composition():
    """Test : ``then`` applique d'abord self, puis l'autre conjugaison."""
    mats = build_FGZ(3)
    phi = Conjugation.by(mats.F, mats.F_inv)
    g = Conjugation.by(mats.G, mats.G_inv)
    x = matrix_unit(3, 0, 1)
    assert cmat_equal(phi.then(g)(x), g(phi(x)))


def test_conjugation_order():
    mats = build_FGZ(5)
    assert conjugation_order(mats.F, 5) == 5
    assert conjugation_order(mats.G, 4) is None


def test_small_k_rejected():
    with pytest.raises(InputError):
        build_FGZ(1)
