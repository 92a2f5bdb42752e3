"""
Discriminant quadratic spaces over F_p.

For a p-elementary D(L) the form q(λ+L) = (p/2)(λ|λ) mod p is well defined
as soon as L is even and p(λ|λ)/2 is an integer for every generator; the
polar form b(x, y) = q(x+y) - q(x) - q(y) = p(λ|μ) mod p.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Dict, Iterator, List, Tuple

import galois
import numpy as np

from ..codes.zp import field as prime_field
from ..core.errors import QuadraticFormError
from ..exact.matrix import Vector
from ..lattice.core import DiscriminantGroup, Lattice, discriminant_group
from ..utils.logger import get_logger

logger = get_logger(__name__)

Element = Tuple[int, ...]

PLUS = "+"
MINUS = "-"
DEGENERATE = "degenerate"


@dataclass(frozen=True)
class QuadraticSpaceFp:
    """(F_p^k, q) given by q on a basis and the polar matrix."""

    p: int
    diagonal: Tuple[int, ...]
    polar: Tuple[Tuple[int, ...], ...]
    group: DiscriminantGroup | None = field(default=None, compare=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.diagonal)

    def q(self, x: Element) -> int:
        p = self.p
        total = 0
        for i, xi in enumerate(x):
            if not xi:
                continue
            total += xi * xi * self.diagonal[i]
            for j in range(i + 1, self.dim):
                total += xi * x[j] * self.polar[i][j]
        return total % p

    def b(self, x: Element, y: Element) -> int:
        return sum(xi * self.polar[i][j] * yj for i, xi in enumerate(x) for j, yj in enumerate(y)) % self.p

    def elements(self) -> Iterator[Element]:
        return product(range(self.p), repeat=self.dim)

    @cached_property
    def values(self) -> Dict[Element, int]:
        return {x: self.q(x) for x in self.elements()}

    def lift(self, x: Element) -> Vector:
        """Representative in L* of the element with coordinates x."""
        if self.group is None:
            raise QuadraticFormError("quadratic space has no underlying lattice")
        return self.group.lift(x)

    def orthogonal_sum(self, other: "QuadraticSpaceFp") -> "QuadraticSpaceFp":
        if other.p != self.p:
            raise QuadraticFormError("orthogonal sum of spaces over different fields")
        n, k = self.dim, other.dim
        polar = [[0] * (n + k) for _ in range(n + k)]
        for i in range(n):
            for j in range(n):
                polar[i][j] = self.polar[i][j]
        for i in range(k):
            for j in range(k):
                polar[n + i][n + j] = other.polar[i][j]
        return QuadraticSpaceFp(self.p, self.diagonal + other.diagonal, tuple(map(tuple, polar)))


def discriminant_form(lattice: Lattice, p: int) -> QuadraticSpaceFp:
    """(D(L), q) for an even lattice with p-elementary discriminant group."""
    if p == 2:
        raise QuadraticFormError("not a p-elementary quadratic space: p must be odd")
    if not lattice.is_even():
        raise QuadraticFormError("not a p-elementary quadratic space: lattice is not even")
    group = discriminant_group(lattice)
    if not group.is_elementary(p):
        raise QuadraticFormError(f"not a p-elementary quadratic space: D(L) = {group.label()}")
    gens = group.generators
    diagonal: List[int] = []
    polar: List[List[int]] = []
    for i, u in enumerate(gens):
        value = Fraction(p, 2) * lattice.norm(u)
        if value.denominator != 1:
            raise QuadraticFormError(f"not a p-elementary quadratic space: q(e_{i}) = {value}")
        diagonal.append(int(value) % p)
        row = []
        for v in gens:
            pair = p * lattice.inner(u, v)
            if pair.denominator != 1:
                raise QuadraticFormError("not a p-elementary quadratic space: polar form is not integral")
            row.append(int(pair) % p)
        polar.append(row)
    space = QuadraticSpaceFp(p, tuple(diagonal), tuple(map(tuple, polar)), group)
    logger.debug(f"discriminant form over F_{p}: q = {space.diagonal}")
    return space


def singular_vectors(space: QuadraticSpaceFp) -> List[Element]:
    """Nonzero x with q(x) = 0, in lexicographic order."""
    return [x for x, v in space.values.items() if v == 0 and any(x)]


def _gram_array(space: QuadraticSpaceFp) -> galois.FieldArray:
    gf = prime_field(space.p)
    return gf(np.array(space.polar, dtype=np.int64).reshape(space.dim, space.dim) % space.p)


def is_nondegenerate(space: QuadraticSpaceFp) -> bool:
    if space.dim == 0:
        return True
    return int(np.linalg.det(_gram_array(space))) != 0


def _is_square(p: int, a: int) -> bool:
    return pow(a % p, (p - 1) // 2, p) == 1


def quadratic_type(space: QuadraticSpaceFp) -> str:
    """
    "+", "-" or "degenerate".

    Dimension 2 is read off the number of nonzero singular vectors (2(p-1)
    for the hyperbolic plane, none for the anisotropic plane).  Otherwise the
    type is "+" exactly when (-1)^{floor(k/2)}·det(b) is a square in F_p.
    """
    if not is_nondegenerate(space):
        return DEGENERATE
    k, p = space.dim, space.p
    if k == 0:
        return PLUS
    if k == 2:
        count = len(singular_vectors(space))
        if count == 2 * (p - 1):
            return PLUS
        if count == 0:
            return MINUS
        return DEGENERATE
    d = int(np.linalg.det(_gram_array(space)))
    sign = -1 if (k // 2) % 2 else 1
    return PLUS if _is_square(p, sign * d) else MINUS


def totally_singular_basis(space: QuadraticSpaceFp, size: int) -> List[Element] | None:
    """
    Greedy search for ``size`` independent, pairwise orthogonal singular
    vectors, in lexicographic order.

    The pass ends on a maximal totally singular subspace, and by Witt's
    theorem all of those have the same dimension, so None means ``size``
    exceeds the Witt index.
    """
    chosen: List[Element] = []
    span = {tuple([0] * space.dim)}
    for x in singular_vectors(space):
        if len(chosen) == size:
            break
        if x in span or any(space.b(x, y) for y in chosen):
            continue
        chosen.append(x)
        span = {
            tuple((a + c * b) % space.p for a, b in zip(s, x))
            for s in span
            for c in range(space.p)
        }
    return chosen if len(chosen) == size else None
