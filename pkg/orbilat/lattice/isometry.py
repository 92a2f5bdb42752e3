"""
Finite-order isometries stored in lattice-basis coordinates.

Convention: row i of ``matrix`` holds the coordinates of g(b_i), so a
coordinate row x maps to x·M and the Gram invariant reads M·G·Mᵀ = G.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import List, Sequence, Tuple

from sympy import Matrix, Poly, cyclotomic_poly, divisors, factor_list, symbols

from ..config import get_settings
from ..core.errors import InvariantViolation, IsometryError, NotFixedPointFree
from ..exact.matrix import (
    Number,
    RatMatrix,
    Vector,
    det,
    frac,
    identity,
    mat_mul,
    mat_pow,
    mat_sub,
    solve_left,
    to_int_rows,
    transpose,
    vec_mat,
)
from ..exact.normal_forms import integer_kernel
from ..utils.logger import get_logger
from .core import Coset, Lattice, dual, intersect, orthogonal_complement, span

logger = get_logger(__name__)

_x = symbols("x")


@dataclass(frozen=True)
class LatticeIsometry:
    lattice: Lattice
    matrix: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_matrix(cls, lattice: Lattice, matrix: Sequence[Sequence[Number]]) -> "LatticeIsometry":
        n = lattice.rank
        if len(matrix) != n or any(len(r) != n for r in matrix):
            raise IsometryError(f"isometry matrix must be {n}x{n}")
        try:
            m = to_int_rows(matrix)
        except ValueError as exc:
            raise IsometryError(f"isometry matrix is not integral: {exc}") from exc
        g = lattice.gram
        if mat_mul(mat_mul(m, g, n), transpose(m), n) != [list(r) for r in g]:
            raise IsometryError("matrix does not preserve the Gram matrix")
        if n and det(m) == 0:
            raise IsometryError("isometry matrix is singular")
        return cls(lattice, tuple(tuple(r) for r in m))

    @classmethod
    def from_ambient(cls, lattice: Lattice, ambient: Sequence[Sequence[Number]]) -> "LatticeIsometry":
        """Restrict the ambient map v -> v·A to the lattice."""
        rows = []
        for b in lattice.basis:
            image = vec_mat(b, ambient, lattice.ambient_dim)
            x = lattice.int_coordinates(image)
            if x is None:
                raise IsometryError("ambient map does not preserve the lattice")
            rows.append(x)
        return cls.from_matrix(lattice, rows)

    @classmethod
    def from_images(
        cls, lattice: Lattice, sources: Sequence[Sequence[Number]], images: Sequence[Sequence[Number]]
    ) -> "LatticeIsometry":
        """Linear map sending sources[i] to images[i], sources spanning the lattice's rational span."""
        if len(sources) != len(images):
            raise IsometryError("sources and images differ in length")
        rows = []
        for b in lattice.basis:
            y = solve_left(sources, b)
            if y is None:
                raise IsometryError("sources do not span the lattice")
            x = lattice.int_coordinates(vec_mat(y, images, lattice.ambient_dim))
            if x is None:
                raise IsometryError("images do not lie in the lattice")
            rows.append(x)
        return cls.from_matrix(lattice, rows)

    @classmethod
    def from_permutation(cls, lattice: Lattice, perm: Sequence[int]) -> "LatticeIsometry":
        """Coordinate permutation moving ambient coordinate i to perm[i]."""
        n = lattice.ambient_dim
        if sorted(perm) != list(range(n)):
            raise IsometryError(f"not a permutation of {n} points")
        return cls.from_ambient(lattice, permutation_matrix(perm))

    @classmethod
    def identity(cls, lattice: Lattice) -> "LatticeIsometry":
        return cls(lattice, tuple(tuple(r) for r in identity(lattice.rank)))

    # -- algebra ------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def compose(self, other: "LatticeIsometry") -> "LatticeIsometry":
        """self after other."""
        return LatticeIsometry(self.lattice, tuple(map(tuple, mat_mul(other.matrix, self.matrix, self.rank))))

    def power(self, k: int) -> "LatticeIsometry":
        if k < 0:
            return self.inverse().power(-k)
        return LatticeIsometry(self.lattice, tuple(tuple(int(v) for v in r) for r in mat_pow(self.matrix, k)))

    def inverse(self) -> "LatticeIsometry":
        return self.power(self.order - 1)

    def apply(self, v: Sequence[Number]) -> Vector:
        """Image of an ambient vector in the rational span of the lattice."""
        x = self.lattice.coordinates(v)
        if x is None:
            raise IsometryError("vector is outside the rational span of the lattice")
        return self.lattice.vector(vec_mat(x, self.matrix, self.rank))

    @cached_property
    def order(self) -> int:
        cap = get_settings().isometry_order_cap
        ident = [list(r) for r in identity(self.rank)]
        current = [list(r) for r in self.matrix]
        n = 1
        while current != ident:
            n += 1
            if n > cap:
                raise IsometryError(f"isometry order exceeds {cap}")
            current = mat_mul(current, self.matrix, self.rank)
        self._check_charpoly(n)
        return n

    def _check_charpoly(self, n: int) -> None:
        if self.rank == 0:
            return
        poly = Matrix(self.matrix).charpoly(_x).as_expr()
        _, factors = factor_list(poly, _x)
        allowed = {Poly(cyclotomic_poly(d, _x), _x): d for d in divisors(n)}
        orders = []
        for f, _mult in factors:
            d = allowed.get(Poly(f, _x))
            if d is None:
                raise InvariantViolation(f"characteristic polynomial factor {f} is not cyclotomic of order dividing {n}")
            orders.append(d)
        if lcm(*orders) != n:
            raise InvariantViolation(f"cyclotomic factors give order {lcm(*orders)}, iteration gave {n}")

    def one_minus(self, s: int = 1) -> List[List[int]]:
        return [list(map(int, r)) for r in mat_sub(identity(self.rank), mat_pow(self.matrix, s))]

    def is_fixed_point_free(self) -> bool:
        return self.rank == 0 or det(self.one_minus()) != 0

    def is_identity(self) -> bool:
        return [list(r) for r in self.matrix] == identity(self.rank)

    # -- sublattices --------------------------------------------------------

    def fixed_sublattice(self) -> Lattice:
        lat = self.lattice
        kernel = integer_kernel(mat_sub(self.matrix, identity(self.rank)))
        return span([lat.vector(k) for k in kernel], lat.ambient_dim, lat.inner_scale)

    def coinvariant_lattice(self) -> Lattice:
        return orthogonal_complement(self.lattice, self.fixed_sublattice())

    def restrict(self, target: Lattice) -> "LatticeIsometry":
        """The same map on another g-invariant lattice in the rational span."""
        rows = []
        for b in target.basis:
            x = target.int_coordinates(self.apply(b))
            if x is None:
                raise IsometryError("target lattice is not invariant under the isometry")
            rows.append(x)
        return LatticeIsometry.from_matrix(target, rows)

    def preserves(self, target: Lattice) -> bool:
        try:
            self.restrict(target)
        except IsometryError:
            return False
        return True

    def one_minus_g_inverse(self) -> RatMatrix:
        """(1-g)^{-1} = (-1/n) Σ_{i=1}^{n-1} i·g^i."""
        if not self.is_fixed_point_free():
            raise NotFixedPointFree("(1-g) is not invertible: g has fixed points")
        n = self.order
        acc = [[Fraction(0)] * self.rank for _ in range(self.rank)]
        power = [list(r) for r in identity(self.rank)]
        for i in range(1, n):
            power = mat_mul(power, self.matrix, self.rank)
            acc = [[a + i * b for a, b in zip(ra, rb)] for ra, rb in zip(acc, power)]
        return RatMatrix.of(acc).scaled(Fraction(-1, n))

    def one_minus_g_image(self, target: Lattice, s: int = 1) -> Lattice:
        """(1 - g^s)·target."""
        gs = self.power(s)
        images = []
        for b in target.basis:
            gb = gs.apply(b)
            images.append(tuple(frac(u) - v for u, v in zip(b, gb)))
        return span(images, target.ambient_dim, target.inner_scale)

    def r_lattice(self, s: int = 1) -> Lattice:
        """((1 - g^s) L*) ∩ L."""
        return intersect(self.one_minus_g_image(dual(self.lattice), s), self.lattice)

    def stabilizes_coset(self, coset: Coset) -> bool:
        image = self.apply(coset.rep)
        return tuple(a - b for a, b in zip(coset.rep, image)) in self.lattice


def permutation_matrix(perm: Sequence[int]) -> List[List[int]]:
    n = len(perm)
    m = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        m[i][j] = 1
    return m


def cyclic_shift_matrix(k: int, power: int = 1) -> List[List[int]]:
    """Ambient matrix of e_j -> e_{j+power} on Z^k."""
    return permutation_matrix([(j + power) % k for j in range(k)])


def block_diagonal(blocks: Sequence[Sequence[Sequence[Number]]]) -> List[List[Number]]:
    n = sum(len(b) for b in blocks)
    out: List[List[Number]] = [[0] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[offset + i][offset + j] = v
        offset += len(b)
    return out


def negation(lattice: Lattice) -> LatticeIsometry:
    return LatticeIsometry(lattice, tuple(tuple(-v for v in r) for r in identity(lattice.rank)))
