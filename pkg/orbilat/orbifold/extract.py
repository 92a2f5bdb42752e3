"""
Recover (C, e, Δ) from a rootless even lattice L, a fixed-point-free
isometry g of odd prime order p and a coset λ + L whose span N = L + Zλ has
exactly p·rank(L) roots.

The p·t roots of λ + L form t extended A_{p-1} diagrams. Mapping each onto
the standard one in Z^p, with the starting vertex fixed so that L lands on
L_B(C), identifies N with L_A(C) and reads g off as the rotation g_{Δ,e}.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from ..codes.construction import ConstructionContext, construct_B
from ..codes.zp import CodeZp, dual_code, first_codeword_of_weight, hamming_weight, is_self_orthogonal
from ..codes.zp import field as prime_field
from ..core.budget import Budget
from ..core.errors import DecompositionError, PreconditionError
from ..exact.matrix import Vector, dot, frac, solve_left, vec_mat
from ..lattice.core import Coset, Lattice, discriminant_group, glue, span
from ..lattice.enumeration import is_rootless, vectors_of_norm
from ..lattice.isometry import LatticeIsometry
from ..lattice.roots import RootComponent, RootDecomposition, decompose_root_set, simple_roots
from ..utils.logger import get_logger
from .invariants import prime_order

logger = get_logger(__name__)


@dataclass(frozen=True)
class LatticeSummary:
    rank: int
    determinant: Fraction
    discriminant: str
    even: bool
    rootless: bool

    @classmethod
    def of(cls, lattice: Lattice, budget: Budget | None = None) -> "LatticeSummary":
        return cls(
            rank=lattice.rank,
            determinant=lattice.determinant,
            discriminant=discriminant_group(lattice).label(),
            even=lattice.is_even(),
            rootless=is_rootless(lattice, budget),
        )


@dataclass(frozen=True)
class Extraction:
    """Résultat de l'extraction : code, vecteur e, bases des diagrammes affines."""

    code: CodeZp
    e: Tuple[int, ...]
    decomposition: RootDecomposition = field(repr=False)
    context: ConstructionContext = field(repr=False)
    embedding: Tuple[Vector, ...] = field(repr=False)
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def base(self) -> Tuple[Tuple[Vector, ...], ...]:
        return tuple(c.base for c in self.decomposition.components)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def span_with_coset(lattice: Lattice, lam: Sequence) -> Lattice:
    return glue(lattice, [lam])


def _check_coset(lattice: Lattice, g: LatticeIsometry, lam: Sequence, p: int) -> Vector:
    vec = tuple(frac(x) for x in lam)
    if not lattice.in_span(vec):
        raise PreconditionError("λ is outside the rational span of L")
    if tuple(p * x for x in vec) not in lattice:
        raise PreconditionError("pλ is not in L")
    if not g.stabilizes_coset(Coset.of(lattice, vec)):
        raise PreconditionError("g does not stabilize λ + L")
    return vec


def _standard_block(p: int) -> List[Vector]:
    """α_1, ..., α_{p-1}, α_0 = v_p - v_1 in Z^p."""
    alphas = simple_roots(p)
    alpha0 = tuple(Fraction(1 if j == p - 1 else -1 if j == 0 else 0) for j in range(p))
    return list(alphas) + [alpha0]


def _component_shift(g: LatticeIsometry, cycle: Sequence[Vector]) -> int:
    position = {v: j for j, v in enumerate(cycle)}
    image = g.apply(cycle[0])
    if image not in position:
        raise DecompositionError("not an A_{p-1}^t configuration: g moves an affine diagram to another")
    shift = position[image]
    n = len(cycle)
    for j, v in enumerate(cycle):
        if g.apply(v) != cycle[(j + shift) % n]:
            raise DecompositionError("not an A_{p-1}^t configuration: g is not a rotation of the affine diagram")
    return shift


def _rotated(comp: RootComponent, offset: int) -> RootComponent:
    """Starts the affine cycle `offset` steps earlier, so cycle[k - offset] becomes vertex k."""
    cycle = comp.cycle
    n = len(cycle)
    turned = tuple(cycle[(k - offset) % n] for k in range(n))
    return RootComponent(turned[:-1], turned[-1])


def _frame(ctx: ConstructionContext, components: Sequence[RootComponent]) -> Callable[[Sequence[Fraction]], Vector]:
    """Linear map sending the base of component i onto α_1, ..., α_{p-1} of block i."""
    standard = _standard_block(ctx.p)
    source: List[Vector] = []
    target: List[Vector] = []
    for i, comp in enumerate(components):
        for j, beta in enumerate(comp.base):
            source.append(beta)
            target.append(ctx.embed(i, standard[j]))

    def phi(v: Sequence[Fraction]) -> Vector:
        coeffs = solve_left(source, v)
        if coeffs is None:
            raise DecompositionError("vector outside the span of the roots")
        return tuple(frac(x) for x in vec_mat(coeffs, target, ctx.ambient_dim))

    return phi


def _word(ctx: ConstructionContext, v: Vector) -> Tuple[int, ...]:
    p = ctx.p
    out = []
    for i in range(ctx.t):
        value = -p * ctx.block(v, i)[0]
        if value.denominator != 1:
            raise DecompositionError("image is not in the dual of the root lattice")
        out.append(int(value) % p)
    return tuple(out)


def _coset_grade(lattice: Lattice, vec: Vector, v: Sequence[Fraction], p: int) -> int:
    """k with v - kλ in L."""
    for k in range(p):
        if tuple(x - k * y for x, y in zip(v, vec)) in lattice:
            return k
    raise DecompositionError("vector outside L + Zλ")


def _rotation_offsets(p: int, t: int, words: Sequence[Sequence[int]], residues: Sequence[int]) -> Tuple[int, ...]:
    """One solution a of <word|a> = residue over Z_p, free coordinates set to 0."""
    gf = prime_field(p)
    rows = [[w % p for w in word] + [r % p] for word, r in zip(words, residues)]
    reduced = np.asarray(gf(np.array(rows, dtype=int).reshape(len(rows), t + 1)).row_reduce(), dtype=int)
    offsets = [0] * t
    for row in reduced:
        support = np.flatnonzero(row)
        if support.size == 0:
            continue
        if support[0] == t:
            raise DecompositionError("no rotation of the affine diagrams carries L onto L_B(C)")
        offsets[int(support[0])] = int(row[t])
    return tuple(offsets)


def chab_extract(
    lattice: Lattice,
    g: LatticeIsometry,
    lam: Sequence,
    budget: Budget | None = None,
    check_rootless: bool = True,
) -> Extraction:
    """
    (C, e, Δ) with N = L + Zλ ≅ L_A(C) and g corresponding to g_{Δ,e}.

    Preconditions are checked one by one and reported as PreconditionError;
    a root system that is not A_{p-1}^t raises DecompositionError.
    """
    p = prime_order(g)
    if p == 2:
        raise PreconditionError("code extraction needs an odd prime order")
    if not lattice.is_even():
        raise PreconditionError("lattice is not even")
    if check_rootless and not is_rootless(lattice, budget):
        raise PreconditionError("lattice has roots")
    vec = _check_coset(lattice, g, lam, p)
    m = lattice.rank
    if m % (p - 1):
        raise PreconditionError(f"rank {m} is not divisible by p-1 = {p - 1}")
    t = m // (p - 1)
    n_lat = span_with_coset(lattice, vec)
    roots = vectors_of_norm(n_lat, 2, budget=budget)
    if len(roots) != p * m:
        raise PreconditionError(f"|N(2)| = {len(roots)}, expected p·m = {p * m}")

    # every root of λ + L pairs to 1/p with χ, so the diagrams come from this coset
    coset_roots = vectors_of_norm(lattice, 2, coset_rep=vec, budget=budget)
    if len(coset_roots) != p * t:
        raise DecompositionError(f"not an A_{{p-1}}^t configuration: {len(coset_roots)} roots in λ + L, expected {p * t}")
    try:
        decomposition = decompose_root_set(coset_roots, p, lattice.inner_scale)
    except DecompositionError as exc:
        raise DecompositionError(f"not an A_{{p-1}}^t configuration: {exc}") from exc
    if decomposition.t != t or decomposition.leftover:
        raise DecompositionError(
            f"not an A_{{p-1}}^t configuration: {decomposition.t} components, {len(decomposition.leftover)} leftover"
        )

    ctx = ConstructionContext.zp(p, t)
    phi = _frame(ctx, decomposition.components)
    first = [phi(b) for b in n_lat.basis]
    residues = []
    for b, image in zip(n_lat.basis, first):
        paired = p * dot(image, ctx.chi)
        if paired.denominator != 1:
            raise DecompositionError("image is not in the dual of the root lattice")
        residues.append(int(paired) - _coset_grade(lattice, vec, b, p))
    offsets = _rotation_offsets(p, t, [_word(ctx, v) for v in first], residues)
    decomposition = RootDecomposition(
        tuple(_rotated(c, a) for c, a in zip(decomposition.components, offsets)), decomposition.leftover
    )

    phi = _frame(ctx, decomposition.components)
    images = [phi(b) for b in n_lat.basis]
    code = CodeZp.from_generators(p, [_word(ctx, v) for v in images], t)
    e = tuple(_component_shift(g, comp.cycle) for comp in decomposition.components)

    image_l = span([phi(b) for b in lattice.basis], ctx.ambient_dim)
    expected = construct_B(ctx, code)
    checks = {
        "self_orthogonal": is_self_orthogonal(code),
        "e_in_dual_code": dual_code(code).contains(e),
        "e_full_weight": hamming_weight(e) == t,
        "image_is_L_B": image_l == expected,
        "fingerprint_match": LatticeSummary.of(expected, budget) == LatticeSummary.of(lattice, budget),
    }
    logger.info(f"extracted [{t},{code.dim}] code over Z_{p}, e={e}, offsets={offsets}, checks={checks}")
    return Extraction(code, e, decomposition, ctx, tuple(images), checks)


def dual_weight_witness(code: CodeZp) -> Tuple[int, ...] | None:
    """First codeword of C^⊥ of full Hamming weight."""
    return first_codeword_of_weight(dual_code(code), code.length)
