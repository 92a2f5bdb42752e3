"""
Coinvariant lattices Λ_h of Golay permutations acting on the Leech lattice,
and the glue reconstruction of an even unimodular lattice from
Λ_h ⊥ Λ^h for the classes 11A and 23A.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..config import get_settings
from ..core.budget import Budget
from ..core.errors import InputError, InvariantViolation
from ..lattice.core import Lattice, discriminant_group, glue, sum_lattices
from ..lattice.enumeration import is_rootless
from ..lattice.isometry import LatticeIsometry
from ..lattice.reduction import reduce_binary_form
from ..orbifold.fingerprint import lattice_fingerprint
from ..orbifold.invariants import dual_image_equals
from ..orbifold.quadratic import MINUS, discriminant_form, quadratic_type, singular_vectors, totally_singular_basis
from ..records.artifact_store import FINGERPRINT, artifact_store
from ..records.schemas import LatticeFingerprint
from ..utils.logger import get_logger
from .permutations import PermutationIsometry, class_permutation

logger = get_logger(__name__)


@dataclass(frozen=True)
class ClassData:
    """Expected invariants of Λ_h for one class."""

    tag: str
    p: int
    rank: int
    discriminant: str
    quadratic_type: str | None = None
    fixed_form: Tuple[int, int, int] | None = None


CLASS_DATA: Dict[str, ClassData] = {
    "3B": ClassData("3B", 3, 12, "Z_3^6"),
    "5B": ClassData("5B", 5, 16, "Z_5^4"),
    "7B": ClassData("7B", 7, 18, "Z_7^3"),
    "11A": ClassData("11A", 11, 20, "Z_11^2", quadratic_type=MINUS),
    "23A": ClassData("23A", 23, 22, "Z_23", fixed_form=(4, 1, 6)),
}

GLUE_TAGS = ("11A", "23A")

_BUILT: Dict[Tuple[str, int | None], "CoinvariantClass"] = {}


@dataclass(frozen=True)
class CoinvariantClass:
    tag: str
    permutation: PermutationIsometry
    lattice: Lattice
    isometry: LatticeIsometry
    fixed: Lattice
    leech_isometry: LatticeIsometry = field(repr=False)
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def p(self) -> int:
        return CLASS_DATA[self.tag].p

    def __iter__(self):
        # (Λ_h, h) unpacking
        return iter((self.lattice, self.isometry))


def _class_data(tag: str) -> ClassData:
    try:
        return CLASS_DATA[tag]
    except KeyError:
        raise InputError(f"unknown class {tag!r}; expected one of {sorted(CLASS_DATA)}") from None


def _has_minus_one(lattice: Lattice, p: int) -> bool:
    space = discriminant_form(lattice, p)
    return any(v == p - 1 for v in space.values.values())


def coinvariant_class(tag: str, seed: int | None = None, budget: Budget | None = None) -> CoinvariantClass:
    """
    (Λ_h, h|Λ_h) for the Golay permutation of the class's cycle type.

    Every expected invariant is checked; the first mismatch raises
    InvariantViolation naming it.
    """
    data = _class_data(tag)
    if seed is None:
        seed = get_settings().seed
    if (tag, seed) in _BUILT:
        return _BUILT[(tag, seed)]
    perm = class_permutation(tag, seed=seed, budget=budget)
    h = perm.on_leech()
    coinv = h.coinvariant_lattice().named(f"Λ_{tag}")
    fixed = h.fixed_sublattice().named(f"Λ^{tag}")
    h_coinv = h.restrict(coinv)

    d_coinv = discriminant_group(coinv)
    d_fixed = discriminant_group(fixed)
    checks: Dict[str, bool] = {
        "order": h_coinv.order == data.p,
        "fixed_point_free": h_coinv.is_fixed_point_free(),
        "rank": coinv.rank == data.rank,
        "rank_sum_24": coinv.rank + fixed.rank == 24,
        "discriminant": d_coinv.label() == data.discriminant,
        "discriminant_orders_agree": d_coinv.order == d_fixed.order,
        "rootless": is_rootless(coinv, budget),
        "dual_image_equals": dual_image_equals(coinv, h_coinv),
    }
    if data.quadratic_type is not None:
        space = discriminant_form(coinv, data.p)
        checks["quadratic_type"] = quadratic_type(space) == data.quadratic_type
        checks["no_singular_vectors"] = not singular_vectors(space)
    if data.fixed_form is not None:
        form = reduce_binary_form(fixed.gram) if fixed.rank == 2 else None
        checks["fixed_form"] = form == tuple(Fraction(x) for x in data.fixed_form)
        checks["q_minus_one"] = _has_minus_one(coinv, data.p)

    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise InvariantViolation(f"coinvariant lattice {tag}: invariant {failed[0]} failed ({failed})")
    logger.info(f"coinvariant lattice {tag}: rank {coinv.rank}, D = {d_coinv.label()}")
    built = CoinvariantClass(tag, perm, coinv, h_coinv, fixed, h, checks)
    _BUILT[(tag, seed)] = built
    return built


def reconstruct_unimodular(
    tag: str,
    seed: int | None = None,
    glue_override: Sequence[Sequence[int]] | None = None,
    budget: Budget | None = None,
) -> Lattice:
    """
    glue(Λ_h ⊥ Λ^h, lifts of a maximal totally singular subspace of the
    discriminant form of Λ_h ⊥ Λ^h).

    ``glue_override`` replaces the subspace by explicit coordinate vectors
    in that discriminant form; the result is checked either way.
    """
    if tag not in GLUE_TAGS:
        raise InputError(f"glue reconstruction is defined for {GLUE_TAGS}, got {tag!r}")
    cc = coinvariant_class(tag, seed=seed, budget=budget)
    base = sum_lattices(cc.lattice, cc.fixed)
    space = discriminant_form(base, cc.p)
    if glue_override is None:
        chosen: List[Tuple[int, ...]] | None = totally_singular_basis(space, space.dim // 2)
        if chosen is None:
            raise InvariantViolation(f"no singular glue found for {tag}")
    else:
        chosen = [tuple(int(x) % cc.p for x in v) for v in glue_override]
        if any(len(v) != space.dim for v in chosen):
            raise InputError(f"glue coordinates must have length {space.dim}")
    glued = glue(base, [space.lift(x) for x in chosen]).named(f"U_{tag}")

    if not glued.is_even():
        raise InvariantViolation(f"glued lattice for {tag} is not even")
    if glued.rank != 24 or glued.determinant != 1:
        raise InvariantViolation(
            f"glued lattice for {tag} has rank {glued.rank} and determinant {glued.determinant}"
        )
    if not is_rootless(glued, budget):
        raise InvariantViolation(f"glued lattice for {tag} has roots")
    logger.info(f"reconstructed an even unimodular rootless lattice from {tag} with glue {chosen}")
    return glued


def reference_fingerprint(tag: str, seed: int | None = None, budget: Budget | None = None) -> LatticeFingerprint:
    """Fingerprint of (Λ_h, h), cached in the artifact store."""
    theta_norm = get_settings().theta_norm
    key = f"{FINGERPRINT}:{tag}:{theta_norm}"
    artifact_store.load_cache()
    cached = artifact_store.get(key)
    if cached:
        return LatticeFingerprint.model_validate(cached)
    cc = coinvariant_class(tag, seed=seed, budget=budget)
    fp = lattice_fingerprint(cc.lattice, cc.isometry, cc.p, theta_norm, budget)
    artifact_store.add(key, FINGERPRINT, fp.model_dump(mode="json"), tag=tag)
    artifact_store.persist()
    return fp
