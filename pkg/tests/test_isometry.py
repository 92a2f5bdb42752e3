from math import prod

import pytest

from orbilat.core.errors import IsometryError, NotFixedPointFree
from orbilat.exact.matrix import RatMatrix
from orbilat.lattice.isometry import LatticeIsometry, cyclic_shift_matrix, negation
from orbilat.lattice.roots import coxeter_isometry, simple_roots
from orbilat.orbifold.invariants import dual_image_equals, quotient_by_one_minus_g


@pytest.fixture
def swap(a2_a2):
    return LatticeIsometry.from_permutation(a2_a2, (3, 4, 5, 0, 1, 2))


def test_coxeter_order_and_inverse(a2_coxeter):
    g = a2_coxeter
    assert g.order == 3
    assert g.compose(g.inverse()).is_identity()
    assert g.power(3).is_identity()
    assert g.power(-1) == g.inverse()


def test_fixed_and_coinvariant_sublattices(swap):
    """Test : l'échange des deux blocs fixe la diagonale."""
    assert swap.order == 2
    assert not swap.is_fixed_point_free()
    fixed = swap.fixed_sublattice()
    coinv = swap.coinvariant_lattice()
    assert fixed.rank == 2 and coinv.rank == 2
    assert fixed.determinant == 12
    assert coinv.determinant == 12
    restricted = swap.restrict(coinv)
    assert restricted.is_fixed_point_free()
    assert restricted == negation(coinv)


def test_one_minus_g_inverse(a2_coxeter, lb_3b):
    for g in (a2_coxeter, lb_3b[2]):
        inv = g.one_minus_g_inverse()
        assert RatMatrix.of(g.one_minus()) @ inv == RatMatrix.identity(g.rank)


def test_one_minus_g_inverse_needs_fixed_point_free(swap):
    with pytest.raises(NotFixedPointFree):
        swap.one_minus_g_inverse()


def test_quotient_by_one_minus_g(a2, a2_coxeter, lb_3b):
    """Test |L/(1-g)L| = p^{m/(p-1)}."""
    assert prod(quotient_by_one_minus_g(a2, a2_coxeter, on_dual=False)) == 3
    _, lattice, g = lb_3b
    assert prod(quotient_by_one_minus_g(lattice, g, on_dual=False)) == 3**6
    assert dual_image_equals(a2, a2_coxeter)


def test_from_images(a2, a2_coxeter):
    sources = simple_roots(3)
    images = [a2_coxeter.apply(v) for v in sources]
    g = LatticeIsometry.from_images(a2, sources, images)
    assert g == a2_coxeter
    with pytest.raises(IsometryError):
        LatticeIsometry.from_images(a2, sources, images[:1])


def test_bad_matrices(a2):
    with pytest.raises(IsometryError):
        LatticeIsometry.from_matrix(a2, [[1, 0], [0, 2]])
    with pytest.raises(IsometryError):
        LatticeIsometry.from_matrix(a2, [[1, 0, 0]])
    with pytest.raises(IsometryError):
        LatticeIsometry.from_ambient(a2, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(IsometryError):
        LatticeIsometry.from_permutation(a2, (0, 0, 1))


def test_cyclic_shift_powers():
    assert cyclic_shift_matrix(3, 3) == cyclic_shift_matrix(3, 0)
    g2 = coxeter_isometry(5, 2)
    assert g2.order == 5
    assert g2 == coxeter_isometry(5).power(2)
