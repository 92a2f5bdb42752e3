"""
Decision procedure: does the orbifold of V_L by a fixed-point-free isometry
g of prime order admit an extra automorphism?

Branches are tried in order and the first witness wins:

* p = 2: a coset λ + L with 2λ ∈ L holding exactly 2m norm-2 vectors;
* p odd: a g-stable coset λ + L with pλ ∈ L whose span N = L + Zλ has
  exactly pm roots, read back as (C, e) with a full-weight word in C^⊥;
* p = 11 or 23: invariant match with the Leech coinvariant lattice of the
  class 11A or 23A.

Cosets are visited in lexicographic order of their coordinates on the
p-torsion generators of D(L), first nonzero coordinate 1.
"""

from itertools import product
from typing import Any, Dict, Iterator, List, Tuple

from ..core.budget import Budget
from ..core.errors import DecompositionError, PreconditionError
from ..exact.matrix import Vector
from ..lattice.core import Coset, Lattice, discriminant_group
from ..lattice.enumeration import is_rootless, vectors_of_norm
from ..lattice.isometry import LatticeIsometry
from ..records.schemas import ExtraAutVerdict, LatticeFingerprint, VerdictBranch
from ..utils.logger import get_logger
from .extract import chab_extract, dual_weight_witness
from .fingerprint import lattice_fingerprint
from .invariants import prime_order

logger = get_logger(__name__)

LEECH_BRANCHES = {11: ("11A", VerdictBranch.LEECH_11A), 23: ("23A", VerdictBranch.LEECH_23A)}


def _projective_points(k: int, p: int) -> Iterator[Tuple[int, ...]]:
    for x in product(range(p), repeat=k):
        if next((c for c in x if c), 0) == 1:
            yield x


def _combine(gens: List[Vector], coeffs: Tuple[int, ...], dim: int) -> Vector:
    out = [0] * dim
    for c, g in zip(coeffs, gens):
        if c:
            out = [a + c * b for a, b in zip(out, g)]
    return tuple(out)


def _may_hold_roots(lattice: Lattice, lam: Vector, p: int) -> bool:
    """Some multiple jλ, 1 <= j < p, has even norm."""
    nrm = lattice.norm(lam)
    return any((j * j * nrm) % 2 == 0 for j in range(1, p))


def _binary_branch(lattice: Lattice, budget: Budget | None) -> Dict[str, Any] | None:
    m = lattice.rank
    gens = discriminant_group(lattice).p_torsion_generators(2)
    for coeffs in _projective_points(len(gens), 2):
        lam = _combine(gens, coeffs, lattice.ambient_dim)
        if lattice.norm(lam) % 2:
            continue
        roots = vectors_of_norm(lattice, 2, coset_rep=lam, budget=budget)
        if len(roots) == 2 * m:
            return {"lambda": lam, "coordinates": coeffs, "coset_roots": len(roots)}
    return None


def stable_cosets(
    lattice: Lattice, g: LatticeIsometry, p: int, budget: Budget | None = None
) -> Iterator[Tuple[Tuple[int, ...], Vector]]:
    """g-stable cosets λ + L with pλ in L that may carry roots, as (coordinates, λ)."""
    gens = discriminant_group(lattice).p_torsion_generators(p)
    for coeffs in _projective_points(len(gens), p):
        if budget is not None:
            budget.check()
        lam = _combine(gens, coeffs, lattice.ambient_dim)
        if not _may_hold_roots(lattice, lam, p):
            continue
        if g.stabilizes_coset(Coset.of(lattice, lam)):
            yield coeffs, lam


def _odd_branch(lattice: Lattice, g: LatticeIsometry, p: int, budget: Budget | None) -> Dict[str, Any] | None:
    tested = 0
    for coeffs, lam in stable_cosets(lattice, g, p, budget):
        tested += 1
        try:
            extraction = chab_extract(lattice, g, lam, budget, check_rootless=False)
        except (PreconditionError, DecompositionError) as exc:
            logger.debug(f"coset {coeffs} rejected: {exc}")
            continue
        word = dual_weight_witness(extraction.code)
        if not extraction.ok or word is None:
            logger.debug(f"coset {coeffs} gives {extraction.code} with checks {extraction.checks}")
            continue
        return {
            "lambda": lam,
            "coordinates": coeffs,
            "code": [list(r) for r in extraction.code.gen],
            "t": extraction.code.length,
            "e": extraction.e,
            "dual_word": word,
            "base": extraction.base,
            "checks": extraction.checks,
        }
    logger.debug(f"{tested} g-stable cosets tested without witness")
    return None


def _leech_branch(
    lattice: Lattice, g: LatticeIsometry, p: int, budget: Budget | None
) -> Tuple[bool, Dict[str, LatticeFingerprint]]:
    from ..leech.coinvariant import CLASS_DATA, reference_fingerprint

    tag, _ = LEECH_BRANCHES[p]
    data = CLASS_DATA[tag]
    if lattice.rank != data.rank or discriminant_group(lattice).label() != data.discriminant:
        return False, {}
    fp = lattice_fingerprint(lattice, g, p, budget=budget)
    ref = reference_fingerprint(tag, budget=budget)
    return fp == ref, {"input": fp, f"Λ_{tag}": ref}


def decide_extra(lattice: Lattice, g: LatticeIsometry, budget: Budget | None = None) -> ExtraAutVerdict:
    """
    Verdict with the first witness found.

    Raises IsometryError/NotFixedPointFree for a bad g and PreconditionError
    when L is not even or has roots.
    """
    p = prime_order(g)
    if not lattice.is_even():
        raise PreconditionError("lattice is not even")
    if not is_rootless(lattice, budget):
        raise PreconditionError("lattice has roots")
    logger.info(f"deciding extra automorphisms for {lattice!r}, p = {p}")

    if p == 2:
        witness = _binary_branch(lattice, budget)
        if witness is not None:
            return ExtraAutVerdict(has_extra=True, branch=VerdictBranch.B_CONSTRUCTION_2, witness=witness)
    else:
        witness = _odd_branch(lattice, g, p, budget)
        if witness is not None:
            return ExtraAutVerdict(has_extra=True, branch=VerdictBranch.B_CONSTRUCTION_ODD, witness=witness)

    fingerprints: Dict[str, LatticeFingerprint] = {}
    if p in LEECH_BRANCHES:
        matched, fingerprints = _leech_branch(lattice, g, p, budget)
        if matched:
            tag, branch = LEECH_BRANCHES[p]
            return ExtraAutVerdict(
                has_extra=True, branch=branch, witness={"class": tag}, fingerprints=fingerprints
            )

    report = {
        "p": p,
        "rank": lattice.rank,
        "discriminant": discriminant_group(lattice).label(),
    }
    logger.info(f"no extra automorphism: {report}")
    return ExtraAutVerdict(has_extra=False, branch=VerdictBranch.NONE, witness=report, fingerprints=fingerprints)
