"""Randomized identities, each over a fixed range of seeds."""

import random
from fractions import Fraction
from itertools import product
from math import isqrt, prod

import pytest

from orbilat.codes.construction import (
    ConstructionContext,
    construct_A,
    construct_B,
    expected_glue_norm,
    g_delta_e,
    glue_vector,
)
from orbilat.codes.zp import CodeZp, is_self_orthogonal
from orbilat.exact.matrix import RatMatrix, det, inverse
from orbilat.lattice.core import Lattice, discriminant_group, dual, index
from orbilat.lattice.enumeration import enumerate_up_to_norm
from orbilat.orbifold.invariants import dual_image_equals, qdim_squared, quotient_by_one_minus_g

SEEDS = range(40)
PRIMES = (3, 5, 7)


def random_lattice(rng: random.Random, rank: int, spread: int = 2) -> Lattice:
    while True:
        rows = [[rng.randint(-spread, spread) for _ in range(rank)] for _ in range(rank)]
        if det(rows) != 0:
            return Lattice.from_basis(rows)


def random_self_orthogonal_word(rng: random.Random, p: int, t: int):
    while True:
        word = [rng.randrange(p) for _ in range(t)]
        if any(word) and sum(x * x for x in word) % p == 0:
            return word


def random_units(rng: random.Random, p: int, t: int):
    return [rng.randrange(1, p) for _ in range(t)]


@pytest.mark.parametrize("seed", SEEDS)
def test_dual_is_an_involution(seed):
    rng = random.Random(seed)
    lat = random_lattice(rng, rng.randint(1, 4))
    assert dual(dual(lat)) == lat


@pytest.mark.parametrize("seed", SEEDS)
def test_discriminant_order_is_determinant(seed):
    rng = random.Random(1000 + seed)
    lat = random_lattice(rng, rng.randint(1, 4))
    assert discriminant_group(lat).order == abs(det([list(r) for r in lat.gram]))
    assert index(lat, dual(lat)) == discriminant_group(lat).order


@pytest.mark.parametrize("seed", SEEDS)
def test_enumeration_matches_naive_box(seed):
    """Test Fincke-Pohst contre une boîte de coordonnées bornée par G^{-1}."""
    rng = random.Random(2000 + seed)
    lat = random_lattice(rng, rng.randint(1, 3), spread=1)
    bound = 6
    gram = [list(r) for r in lat.gram]
    g_inv = inverse(gram)
    radii = [isqrt(int(bound * g_inv[i][i])) + 1 for i in range(lat.rank)]
    naive = 0
    for x in product(*(range(-r, r + 1) for r in radii)):
        nrm = sum(x[i] * gram[i][j] * x[j] for i in range(lat.rank) for j in range(lat.rank))
        if nrm <= bound:
            naive += 1
    assert len(enumerate_up_to_norm(lat, bound)) == naive


@pytest.mark.parametrize("seed", SEEDS)
def test_discriminants_of_constructions(seed):
    """Test |D(L_A)| = p^{t-2}, |D(L_B)| = p^t et [L_A : L_B] = p pour un mot auto-orthogonal."""
    rng = random.Random(3000 + seed)
    p = rng.choice((3, 5))
    t = rng.randint(2, 5) if p == 5 else rng.randint(3, 6)
    code = CodeZp.from_generators(p, [random_self_orthogonal_word(rng, p, t)])
    assert is_self_orthogonal(code)
    ctx = ConstructionContext.zp(p, t)
    la = construct_A(ctx, code)
    lb = construct_B(ctx, code)
    assert discriminant_group(la).order == p ** (t - 2)
    assert discriminant_group(lb).order == p**t
    assert index(lb, la) == p


@pytest.mark.parametrize("seed", SEEDS)
def test_glue_norm_identity(seed):
    rng = random.Random(4000 + seed)
    orders = tuple(rng.randint(2, 7) for _ in range(rng.randint(1, 4)))
    ctx = ConstructionContext(orders)
    x = [rng.randrange(k) for k in orders]
    assert glue_vector(ctx, x).norm == expected_glue_norm(ctx, x)
    assert expected_glue_norm(ctx, x) == sum(Fraction(a * (k - a), k) for a, k in zip(x, orders))


@pytest.mark.parametrize("seed", SEEDS)
def test_one_minus_g_identities(seed):
    """Test (1-g)(1-g)^{-1} = I, |R/(1-g)R| = p^t et qdim^2 = 1 sur R."""
    rng = random.Random(5000 + seed)
    p = rng.choice(PRIMES)
    t = rng.randint(1, 2 if p == 7 else 3)
    ctx = ConstructionContext.zp(p, t)
    g = g_delta_e(ctx, random_units(rng, p, t))
    root_lattice = ctx.root_lattice
    assert RatMatrix.of(g.one_minus()) @ g.one_minus_g_inverse() == RatMatrix.identity(g.rank)
    assert prod(quotient_by_one_minus_g(root_lattice, g, on_dual=False)) == p**t
    assert dual_image_equals(root_lattice, g)
    assert qdim_squared(root_lattice, g) == 1
