"""
Seeded random search for Golay automorphisms of a prescribed cycle type.

A random walk on the group generated by the fixture permutations is
sampled in batches; each visited element and its power of prime order are
tested against the target.  Batches are driven by tenacity until a hit or
the product budget is spent.  Hits are cached in the artifact store.
"""

import random
from dataclasses import dataclass
from math import lcm
from typing import Dict, List, Sequence, Tuple

from sympy import isprime
from sympy.combinatorics import Permutation
from tenacity import RetryError, Retrying, retry_if_result, stop_after_attempt

from ..config import get_settings
from ..core.budget import Budget
from ..core.errors import BudgetExceeded, FixtureError, InputError
from ..lattice.isometry import LatticeIsometry
from ..records.artifact_store import PERMUTATION, artifact_store
from ..utils.logger import get_logger
from .golay import GOLAY_LENGTH, build_golay, golay_automorphism_generators
from .leech import build_leech

logger = get_logger(__name__)

CycleType = Dict[int, int]

CYCLE_TYPES = {
    "3B": "1^6 3^6",
    "5B": "1^4 5^4",
    "7B": "1^3 7^3",
    "11A": "1^2 11^2",
    "23A": "1 23",
}


def parse_cycle_type(text: str) -> CycleType:
    """Parse "1^6 3^6" into {1: 6, 3: 6}; the cycles must cover 24 points."""
    out: CycleType = {}
    try:
        for token in text.replace("·", " ").split():
            length, _, count = token.partition("^")
            out[int(length)] = out.get(int(length), 0) + int(count or 1)
    except ValueError as exc:
        raise InputError(f"malformed cycle type {text!r}") from exc
    if sum(k * v for k, v in out.items()) != GOLAY_LENGTH:
        raise InputError(f"cycle type {text!r} does not cover {GOLAY_LENGTH} points")
    return dict(sorted(out.items()))


def format_cycle_type(ct: CycleType) -> str:
    return " ".join(f"{k}^{v}" if v > 1 else str(k) for k, v in sorted(ct.items()))


def cycle_type(perm: Sequence[int]) -> CycleType:
    return dict(sorted(Permutation(list(perm)).cycle_structure.items()))


def compose(first: Sequence[int], then: Sequence[int]) -> Tuple[int, ...]:
    """Apply ``first`` and then ``then``."""
    return tuple(then[i] for i in first)


def inverse(perm: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(perm)
    for i, j in enumerate(perm):
        out[j] = i
    return tuple(out)


@dataclass(frozen=True)
class PermutationIsometry:
    """Golay automorphism with its action on the Leech lattice."""

    perm: Tuple[int, ...]
    cycle_type: str
    seed: int | None = None

    @property
    def order(self) -> int:
        return lcm(*parse_cycle_type(self.cycle_type))

    def on_leech(self) -> LatticeIsometry:
        return LatticeIsometry.from_permutation(build_leech(), self.perm)


def _matching_power(perm: Tuple[int, ...], target: CycleType, order: int) -> Tuple[int, ...] | None:
    p = Permutation(list(perm))
    n = p.order()
    if n % order:
        return None
    h = p ** (n // order)
    if dict(h.cycle_structure) == target:
        return tuple(h.array_form)
    return None


def _cache_key(ct: str, seed: int) -> str:
    return f"{PERMUTATION}:{ct}:{seed}"


def _from_cache(key: str, target: CycleType) -> Tuple[int, ...] | None:
    artifact_store.load_cache()
    cached = artifact_store.get(key)
    if not cached:
        return None
    perm = tuple(cached.get("perm", ()))
    if sorted(perm) != list(range(GOLAY_LENGTH)) or cycle_type(perm) != target:
        logger.warning(f"discarding stale cache entry {key}")
        artifact_store.delete(key)
        return None
    return perm


def find_golay_automorphism(
    target_cycle_type: str,
    seed: int | None = None,
    budget: Budget | None = None,
    use_cache: bool = True,
) -> PermutationIsometry:
    """
    First automorphism of the Golay fixture with the given cycle type met by
    the walk seeded with ``seed``.  The order of the target must be prime.

    Raises BudgetExceeded after ``search_max_products`` steps.
    """
    settings = get_settings()
    if seed is None:
        seed = settings.seed
    target = parse_cycle_type(target_cycle_type)
    order = lcm(*target)
    if not isprime(order):
        raise InputError(f"target order {order} is not prime")
    label = format_cycle_type(target)
    key = _cache_key(label, seed)
    golay = build_golay()

    if use_cache:
        cached = _from_cache(key, target)
        if cached is not None and golay.preserved_by(cached):
            logger.debug(f"cycle type {label} found in cache")
            return PermutationIsometry(cached, label, seed)

    gens: List[Tuple[int, ...]] = []
    for g in golay_automorphism_generators().values():
        gens.extend([g, inverse(g)])
    rng = random.Random(seed)
    state = tuple(range(GOLAY_LENGTH))
    batch_size = settings.search_batch_size
    batches = max(1, settings.search_max_products // batch_size)

    def run_batch() -> Tuple[int, ...] | None:
        nonlocal state
        for _ in range(batch_size):
            if budget is not None:
                budget.check()
            state = compose(state, rng.choice(gens))
            hit = _matching_power(state, target, order)
            if hit is not None:
                return hit
        return None

    try:
        hit = Retrying(
            stop=stop_after_attempt(batches),
            retry=retry_if_result(lambda r: r is None),
        )(run_batch)
    except RetryError as exc:
        raise BudgetExceeded(
            f"no permutation of cycle type {label} after {batches * batch_size} products",
            partial={"cycle_type": label, "seed": seed},
        ) from exc

    if not golay.preserved_by(hit):
        raise FixtureError(f"search produced a permutation outside the Golay automorphism group: {hit}")
    logger.info(f"found Golay automorphism of cycle type {label} (seed {seed})")
    if use_cache:
        artifact_store.add(key, PERMUTATION, {"perm": list(hit), "cycle_type": label, "seed": seed})
        artifact_store.persist()
    return PermutationIsometry(hit, label, seed)


def class_permutation(tag: str, seed: int | None = None, budget: Budget | None = None) -> PermutationIsometry:
    if tag not in CYCLE_TYPES:
        raise InputError(f"unknown class {tag!r}; expected one of {sorted(CYCLE_TYPES)}")
    return find_golay_automorphism(CYCLE_TYPES[tag], seed=seed, budget=budget)
