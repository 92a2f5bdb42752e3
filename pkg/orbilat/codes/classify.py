"""
Exhaustive classification of short codes over Z_p up to signed permutations.

The search grows codes one generator at a time.  Candidates are deduplicated
in three passes: exact equality of the reduced generator matrix, then the
equivalence fingerprint, then an explicit monomial_equivalent check inside a
fingerprint bucket.  Every valid code of dimension d contains a valid code of
dimension d-1, so extending one representative per class is exhaustive.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Tuple

from ..config import get_settings
from ..core.budget import Budget
from ..core.errors import BudgetExceeded, CodeError
from ..lattice.enumeration import is_rootless
from ..utils.logger import get_logger
from .construction import ConstructionContext, codeword_creates_root, construct_B
from .zp import CodeZp, fingerprint, inner, is_self_orthogonal, monomial_equivalent

logger = get_logger(__name__)


@dataclass
class ClassBucket:
    """Representatives of the classes found so far, bucketed by fingerprint."""

    buckets: Dict[Tuple, List[CodeZp]] = field(default_factory=dict)
    seen: set = field(default_factory=set)

    def add(self, code: CodeZp, budget: Budget) -> bool:
        if code.gen in self.seen:
            return False
        self.seen.add(code.gen)
        key = fingerprint(code)
        reps = self.buckets.setdefault(key, [])
        for rep in reps:
            budget.check()
            if monomial_equivalent(rep, code) is not None:
                return False
        reps.append(code)
        return True

    def representatives(self) -> List[CodeZp]:
        out = [c for reps in self.buckets.values() for c in reps]
        return sorted(out, key=lambda c: c.gen)


def _normalized_vectors(p: int, t: int):
    """Nonzero vectors of Z_p^t whose first nonzero entry is 1."""
    for v in product(range(p), repeat=t):
        first = next((x for x in v if x), 0)
        if first == 1:
            yield v


def _admissible_word(p: int, word, require_self_orthogonal: bool, prune_roots: bool) -> bool:
    if require_self_orthogonal and inner(p, word, word):
        return False
    if prune_roots and codeword_creates_root(p, word):
        return False
    return True


def _extension_ok(code: CodeZp, new: CodeZp, require_self_orthogonal: bool, prune_roots: bool) -> bool:
    if require_self_orthogonal and not is_self_orthogonal(new):
        return False
    if prune_roots:
        return not any(codeword_creates_root(new.p, w) for w in new.codewords() if w not in code)
    return True


def classify_codes(
    p: int,
    t: int,
    dim: int,
    require_self_orthogonal: bool = True,
    require_B_rootless: bool = True,
    budget: Budget | None = None,
) -> List[CodeZp]:
    """
    One representative per equivalence class of [t, dim] codes over Z_p
    satisfying the requested predicates.

    Raises BudgetExceeded with the representatives found at the current
    dimension as ``partial``.
    """
    if dim < 0 or dim > t:
        raise CodeError(f"dimension {dim} outside 0..{t}")
    if budget is None:
        budget = Budget(get_settings().classification_budget, label=f"classify({p},{t},{dim})")
    prune_roots = require_B_rootless and p % 2 == 1
    logger.info(f"classifying [{t},{dim}] codes over Z_{p}")

    if dim == 0:
        level = [CodeZp.zero(p, t)]
    else:
        bucket = ClassBucket()
        try:
            for v in _normalized_vectors(p, t):
                budget.check()
                if _admissible_word(p, v, require_self_orthogonal, prune_roots):
                    bucket.add(CodeZp.from_generators(p, [v]), budget)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), partial=bucket.representatives()) from exc
        level = bucket.representatives()
        logger.debug(f"dimension 1: {len(level)} classes")

        for d in range(2, dim + 1):
            bucket = ClassBucket()
            try:
                for code in level:
                    for v in _normalized_vectors(p, t):
                        budget.check()
                        if code.contains(v):
                            continue
                        new = code.span_with(v)
                        if new.gen in bucket.seen:
                            continue
                        if _extension_ok(code, new, require_self_orthogonal, prune_roots):
                            bucket.add(new, budget)
                        else:
                            bucket.seen.add(new.gen)
            except BudgetExceeded as exc:
                raise BudgetExceeded(str(exc), partial=bucket.representatives()) from exc
            level = bucket.representatives()
            logger.debug(f"dimension {d}: {len(level)} classes")

    if require_B_rootless:
        ctx = ConstructionContext.zp(p, t)
        survivors = []
        for code in level:
            budget.check()
            if is_rootless(construct_B(ctx, code), budget=budget):
                survivors.append(code)
        level = survivors
    logger.info(f"[{t},{dim}] over Z_{p}: {len(level)} classes")
    return level
