import pytest

from orbilat.core.errors import QuadraticFormError
from orbilat.lattice.core import Lattice, direct_sum
from orbilat.lattice.roots import type_a
from orbilat.orbifold.quadratic import (
    DEGENERATE,
    MINUS,
    PLUS,
    QuadraticSpaceFp,
    discriminant_form,
    is_nondegenerate,
    quadratic_type,
    singular_vectors,
    totally_singular_basis,
)


def test_anisotropic_plane(a2_a2):
    """Test A2 ⊥ A2 : q = x² + y² sur F_3, sans vecteur singulier."""
    space = discriminant_form(a2_a2, 3)
    assert space.dim == 2
    assert quadratic_type(space) == MINUS
    assert singular_vectors(space) == []
    assert totally_singular_basis(space, 1) is None


def test_hyperbolic_plane(a2, e6):
    lattice = direct_sum(a2, e6)
    space = discriminant_form(lattice, 3)
    assert quadratic_type(space) == PLUS
    assert len(singular_vectors(space)) == 4
    basis = totally_singular_basis(space, 1)
    assert basis is not None and space.q(basis[0]) == 0
    assert totally_singular_basis(space, 2) is None
    glued = space.lift(basis[0])
    assert lattice.norm(glued) % 2 == 0


def test_orthogonal_sum_matches_lattice_sum(a2, e6):
    left = discriminant_form(a2, 3)
    right = discriminant_form(e6, 3)
    combined = left.orthogonal_sum(right)
    assert combined.dim == 2
    assert quadratic_type(combined) == PLUS
    with pytest.raises(QuadraticFormError):
        combined.lift((1, 0))


def test_polar_form(a2_a2):
    space = discriminant_form(a2_a2, 3)
    x, y = (1, 0), (1, 1)
    total = tuple((a + b) % 3 for a, b in zip(x, y))
    assert space.b(x, y) == (space.q(total) - space.q(x) - space.q(y)) % 3


def test_degenerate_space():
    space = QuadraticSpaceFp(3, (0,), ((0,),))
    assert not is_nondegenerate(space)
    assert quadratic_type(space) == DEGENERATE


def test_not_p_elementary():
    with pytest.raises(QuadraticFormError):
        discriminant_form(type_a(3).lattice, 2)
    with pytest.raises(QuadraticFormError):
        discriminant_form(Lattice.from_basis([[1]]), 3)
    with pytest.raises(QuadraticFormError):
        discriminant_form(type_a(4).lattice, 3)


def test_greedy_reaches_witt_index(a2, e6):
    """Test : deux plans hyperboliques, indice de Witt 2 atteint sans retour arrière."""
    space = discriminant_form(direct_sum(a2, e6, a2, e6), 3)
    assert space.dim == 4
    basis = totally_singular_basis(space, 2)
    assert basis is not None and len(basis) == 2
    assert all(space.q(x) == 0 for x in basis)
    assert space.b(basis[0], basis[1]) == 0
    assert totally_singular_basis(space, 3) is None
