"""
The Leech lattice in the standard coordinates scaled by 1/8.

Generators: 2c for the Golay rows c, 4(e_i - e_{i+1}), 4(e_0 + e_1) and
(-3, 1, ..., 1); the inner product is (x·y)/8.
"""

from functools import lru_cache
from typing import List

from ..core.budget import Budget
from ..core.errors import FixtureError
from ..lattice.core import Lattice, span
from ..lattice.enumeration import is_rootless, minimum_norm
from ..utils.logger import get_logger
from .golay import GOLAY_LENGTH, build_golay

logger = get_logger(__name__)

LEECH_SCALE = "1/8"


def leech_generators() -> List[List[int]]:
    n = GOLAY_LENGTH
    gens: List[List[int]] = [[2 * x for x in row] for row in build_golay().rows]
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 4, -4
        gens.append(v)
    gens.append([4, 4] + [0] * (n - 2))
    gens.append([-3] + [1] * (n - 1))
    return gens


@lru_cache(maxsize=1)
def build_leech(check_rootless: bool = True) -> Lattice:
    """Even unimodular rootless lattice of rank 24; FixtureError if not."""
    leech = span(leech_generators(), GOLAY_LENGTH, LEECH_SCALE, name="Leech")
    if leech.rank != 24 or leech.determinant != 1:
        raise FixtureError(f"Leech fixture has rank {leech.rank} and determinant {leech.determinant}")
    if not leech.is_even():
        raise FixtureError("Leech fixture is not even")
    if check_rootless and not is_rootless(leech):
        raise FixtureError("Leech fixture has roots")
    logger.debug("Leech lattice built and verified")
    return leech


def leech_minimum(budget: Budget | None = None) -> int:
    return int(minimum_norm(build_leech(), budget))
