"""
Closed-form invariants of the cyclic orbifold attached to (L, g).

Everything here is exact arithmetic on lattice data: the twisted conformal
weight, (dim T)^2 as an index, the quantum dimension of the twisted modules,
the conformal-weight sets and the parameter table for rootless coinvariant
lattices whose orbifold admits an extra automorphism.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Tuple

from sympy import isprime

from ..core.budget import Budget
from ..core.errors import InputError, IsometryError, NotFixedPointFree, PreconditionError
from ..exact.normal_forms import snf
from ..lattice.core import Lattice, coordinate_matrix, discriminant_group, dual, index, is_sublattice
from ..lattice.enumeration import coset_minimum_norm
from ..lattice.isometry import LatticeIsometry
from ..utils.logger import get_logger

logger = get_logger(__name__)

CASE_SIMPLE = "epsilon = 1 - 1/p"
CASE_DEGENERATE = "epsilon = 1"


def epsilon(p: int, m: int) -> Fraction:
    """Conformal weight m(p+1)/(24p) of the g^s-twisted module of V_L."""
    if not isprime(p):
        raise InputError(f"p must be prime, got {p}")
    if m < 1:
        raise InputError(f"rank must be positive, got {m}")
    return Fraction(m * (p + 1), 24 * p)


@dataclass(frozen=True)
class OrbifoldParams:
    """Une ligne admissible (p, m) avec la taille prédite de D(L)."""

    p: int
    m: int
    epsilon: Fraction
    discriminant_order: int
    case: str

    @property
    def t(self) -> int:
        return self.m // (self.p - 1)

    @property
    def dim_t(self) -> int:
        return 1 if self.case == CASE_SIMPLE else self.t

    def label(self) -> str:
        """D(L) written as Z_p^k."""
        k, n = 0, self.discriminant_order
        while n > 1:
            n //= self.p
            k += 1
        return f"Z_{self.p}^{k}" if k > 1 else f"Z_{self.p}"


def _admissible_rank(numerator: int, p: int) -> int | None:
    if numerator % (p + 1):
        return None
    m = numerator // (p + 1)
    if m < 1 or m >= 24 or m % (p - 1):
        return None
    return m


def case2_parameter_table(p: int) -> List[OrbifoldParams]:
    """
    Rows (m, |D(L)|) compatible with an extra automorphism for odd prime p.

    With t = m/(p-1): epsilon = 1 - 1/p forces m = 24(p-1)/(p+1) and
    |D(L)| = p^t; epsilon = 1 forces m = 24p/(p+1) and |D(L)| = p^t / t^2.
    """
    if p == 2 or not isprime(p):
        raise InputError(f"parameter table needs an odd prime, got {p}")
    rows: List[OrbifoldParams] = []
    m = _admissible_rank(24 * (p - 1), p)
    if m is not None:
        t = m // (p - 1)
        rows.append(OrbifoldParams(p, m, epsilon(p, m), p**t, CASE_SIMPLE))
    m = _admissible_rank(24 * p, p)
    if m is not None:
        t = m // (p - 1)
        order, rem = divmod(p**t, t * t)
        if not rem and _is_power_of(order, p):
            rows.append(OrbifoldParams(p, m, epsilon(p, m), order, CASE_DEGENERATE))
    return rows


def _is_power_of(n: int, p: int) -> bool:
    while n > 1 and n % p == 0:
        n //= p
    return n == 1


def prime_order(g: LatticeIsometry) -> int:
    """Order of g, checked to be prime with g fixed-point free."""
    p = g.order
    if not isprime(p):
        raise IsometryError(f"isometry order {p} is not prime")
    if not g.is_fixed_point_free():
        raise NotFixedPointFree("isometry is not fixed-point free")
    return p


def _check_power(p: int, s: int) -> None:
    if not 1 <= s <= p - 1:
        raise InputError(f"power s must lie in 1..{p - 1}, got {s}")


def dim_T_squared(lattice: Lattice, g: LatticeIsometry, s: int = 1) -> int:
    """[L : ((1-g^s)L*) ∩ L]."""
    p = prime_order(g)
    _check_power(p, s)
    value = index(g.r_lattice(s), lattice)
    if isqrt(value) ** 2 != value:
        logger.warning(f"(dim T)^2 = {value} is not a perfect square for {lattice!r}")
    return value


def qdim_squared(lattice: Lattice, g: LatticeIsometry, s: int = 1) -> Fraction:
    """p^{-m/(p-1)} |D(L)| [L : R_L^{g^s}]."""
    p = prime_order(g)
    _check_power(p, s)
    t = lattice.rank // (p - 1)
    order = discriminant_group(lattice).order
    return Fraction(order * index(g.r_lattice(s), lattice), p**t)


def quotient_by_one_minus_g(lattice: Lattice, g: LatticeIsometry, on_dual: bool = True) -> Tuple[int, ...]:
    """Invariant factors of L*/(1-g)L* (or L/(1-g)L)."""
    source = dual(lattice) if on_dual else lattice
    image = g.one_minus_g_image(source)
    return tuple(snf(coordinate_matrix(image, source)).invariant_factors)


def dual_image_inside(lattice: Lattice, g: LatticeIsometry, s: int = 1) -> bool:
    """(1-g^s)L* ⊆ L, i.e. g^s acts trivially on D(L)."""
    return is_sublattice(g.one_minus_g_image(dual(lattice), s), lattice)


def dual_image_equals(lattice: Lattice, g: LatticeIsometry) -> bool:
    return g.one_minus_g_image(dual(lattice)) == lattice


@dataclass(frozen=True)
class ConformalWeightReport:
    p: int
    epsilon: Fraction
    twisted_ladder: Tuple[Fraction, ...]
    coset_weights: Dict[Tuple[int, ...], Fraction] = field(repr=False)
    untwisted_weights: Tuple[Fraction, ...]
    all_weights: Tuple[Fraction, ...]
    matches_ladder: bool
    even_nonzero_cosets: int

    @property
    def integral_weights(self) -> Tuple[Fraction, ...]:
        return tuple(w for w in self.all_weights if w.denominator == 1)


def conformal_weight_data(lattice: Lattice, g: LatticeIsometry, budget: Budget | None = None) -> ConformalWeightReport:
    """
    Untwisted weights {0, 1} ∪ {min norm(λ+L)/2}, the twisted ladder
    {ε + i/p : 0 <= i < p}, and whether their union is {0} ∪ ladder.
    """
    p = prime_order(g)
    if not dual_image_inside(lattice, g):
        raise PreconditionError("(1-g)L* is not contained in L")
    eps = epsilon(p, lattice.rank)
    ladder = tuple(eps + Fraction(i, p) for i in range(p))
    group = discriminant_group(lattice)
    weights: Dict[Tuple[int, ...], Fraction] = {}
    for coords in group.elements():
        if not any(coords):
            continue
        if budget is not None:
            budget.check()
        weights[coords] = coset_minimum_norm(lattice, group.lift(coords), budget) / 2
    untwisted = {Fraction(0), Fraction(1)} | set(weights.values())
    union = tuple(sorted(untwisted | set(ladder)))
    expected = tuple(sorted({Fraction(0)} | set(ladder)))
    even = sum(1 for w in weights.values() if w.denominator == 1)
    report = ConformalWeightReport(
        p=p,
        epsilon=eps,
        twisted_ladder=ladder,
        coset_weights=weights,
        untwisted_weights=tuple(sorted(untwisted)),
        all_weights=union,
        matches_ladder=union == expected,
        even_nonzero_cosets=even,
    )
    logger.debug(f"conformal weights of {lattice!r}: ladder match={report.matches_ladder}")
    return report


@dataclass(frozen=True)
class WeightOneCount:
    rank_fixed: int
    rank_coinvariant: int
    p: int
    dimension: int

    @property
    def is_24(self) -> bool:
        return self.dimension == 24


def orbifold_weight_one_dim(rank_fixed: int, rank_coinv: int, p: int) -> WeightOneCount:
    """rank Λ^h + (p-1)·rank Λ_h/(p-1)."""
    if p < 2 or rank_coinv % (p - 1):
        raise InputError(f"coinvariant rank {rank_coinv} is not divisible by p-1 = {p - 1}")
    dim = rank_fixed + (p - 1) * (rank_coinv // (p - 1))
    return WeightOneCount(rank_fixed, rank_coinv, p, dim)


def fusion_group_label(lattice: Lattice, p: int) -> str:
    """Abelian group D(L) x Z_p^2 carried by the irreducible modules."""
    group = discriminant_group(lattice)
    base = group.label()
    extra = f"Z_{p}^2"
    return extra if base == "1" else f"{base} x {extra}"
