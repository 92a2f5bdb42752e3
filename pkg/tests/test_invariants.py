from fractions import Fraction

import pytest

from orbilat.core.errors import InputError, IsometryError, NotFixedPointFree
from orbilat.lattice.isometry import LatticeIsometry
from orbilat.orbifold.invariants import (
    CASE_DEGENERATE,
    CASE_SIMPLE,
    case2_parameter_table,
    conformal_weight_data,
    dim_T_squared,
    dual_image_inside,
    epsilon,
    fusion_group_label,
    orbifold_weight_one_dim,
    prime_order,
    qdim_squared,
)

EXPECTED_TABLE = {
    3: [(12, 3**6), (18, 3**5)],
    5: [(16, 5**4), (20, 5**3)],
    7: [(18, 7**3)],
    11: [(20, 11**2)],
    23: [(22, 23)],
}


def test_epsilon():
    assert epsilon(3, 12) == Fraction(2, 3)
    assert epsilon(3, 18) == 1
    assert epsilon(23, 22) == Fraction(22, 23)
    with pytest.raises(InputError):
        epsilon(4, 12)
    with pytest.raises(InputError):
        epsilon(3, 0)


@pytest.mark.parametrize("p", sorted(EXPECTED_TABLE))
def test_case2_parameter_table(p):
    rows = case2_parameter_table(p)
    assert [(r.m, r.discriminant_order) for r in rows] == EXPECTED_TABLE[p]
    for r in rows:
        assert r.epsilon == (1 - Fraction(1, p) if r.case == CASE_SIMPLE else 1)


def test_case2_totals():
    total = sum(len(case2_parameter_table(p)) for p in (3, 5, 7, 11, 13, 17, 19, 23))
    assert total == 7
    assert case2_parameter_table(13) == []
    assert case2_parameter_table(3)[1].case == CASE_DEGENERATE
    assert case2_parameter_table(5)[1].label() == "Z_5^3"
    with pytest.raises(InputError):
        case2_parameter_table(2)


def test_prime_order_rejects_identity(a2):
    with pytest.raises(IsometryError):
        prime_order(LatticeIsometry.identity(a2))


def test_prime_order_rejects_fixed_points(a2_a2):
    swap = LatticeIsometry.from_permutation(a2_a2, (3, 4, 5, 0, 1, 2))
    with pytest.raises(NotFixedPointFree):
        prime_order(swap)


def test_dim_t_on_construction_b(lb_3b):
    _, lattice, g = lb_3b
    assert dim_T_squared(lattice, g) == 1
    assert dim_T_squared(lattice, g, s=2) == 1
    assert qdim_squared(lattice, g) == 1
    with pytest.raises(InputError):
        dim_T_squared(lattice, g, s=3)


def test_qdim_of_scaled_a2(a2, a2_coxeter):
    """Test qdim^2 = 4 pour sqrt(2)·A2 avec l'isométrie de Coxeter."""
    scaled = a2.scaled(2)
    g = LatticeIsometry.from_matrix(scaled, a2_coxeter.matrix)
    assert qdim_squared(scaled, g) == 4
    assert dim_T_squared(scaled, g) == 1


def test_conformal_weights_of_a2(a2, a2_coxeter):
    report = conformal_weight_data(a2, a2_coxeter)
    assert report.epsilon == Fraction(1, 9)
    assert report.twisted_ladder == (Fraction(1, 9), Fraction(4, 9), Fraction(7, 9))
    assert set(report.coset_weights.values()) == {Fraction(1, 3)}
    assert not report.matches_ladder
    assert report.even_nonzero_cosets == 0
    assert report.integral_weights == (0, 1)
    assert dual_image_inside(a2, a2_coxeter)


def test_weight_one_dimension():
    count = orbifold_weight_one_dim(12, 12, 3)
    assert count.dimension == 24
    assert count.is_24
    assert orbifold_weight_one_dim(2, 22, 23).is_24
    with pytest.raises(InputError):
        orbifold_weight_one_dim(8, 15, 5)


def test_fusion_group_label(a2, lb_3b):
    assert fusion_group_label(a2, 3) == "Z_3 x Z_3^2"
    assert fusion_group_label(lb_3b[1], 3) == "Z_3^6 x Z_3^2"
