"""
Lattices as exact rational bases in an ambient inner-product space.

A lattice is stored by its canonical basis: the Hermite form of D·B divided
by D, for any common denominator D of the generators.  Two lattices are equal
iff their canonical bases, ambient dimensions and inner scales agree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Iterator, List, Sequence, Tuple

from ..core.errors import LatticeError, NotSublatticeError
from ..exact.matrix import (
    Number,
    Vector,
    as_vector,
    common_denominator,
    det,
    dot,
    frac,
    inverse,
    mat_mul,
    solve_left,
    vec_mat,
)
from ..exact.normal_forms import hnf, integer_kernel, snf
from ..utils.logger import get_logger

logger = get_logger(__name__)

Basis = Tuple[Vector, ...]


def _integral_rows(rows: Sequence[Sequence[Number]]) -> Tuple[int, List[List[int]]]:
    d = common_denominator(rows)
    return d, [[int(frac(x) * d) for x in row] for row in rows]


def canonical_basis(generators: Sequence[Sequence[Number]], ambient_dim: int) -> Basis:
    """Hermite-reduced basis of the Z-span of the generators."""
    gens = [as_vector(g) for g in generators if any(frac(x) != 0 for x in g)]
    if not gens:
        return ()
    if any(len(g) != ambient_dim for g in gens):
        raise LatticeError(f"generator length differs from ambient dimension {ambient_dim}")
    d, ints = _integral_rows(gens)
    h, _ = hnf(ints)
    return tuple(tuple(Fraction(x, d) for x in row) for row in h if any(row))


@dataclass(frozen=True)
class Lattice:
    """Z-span of independent rational rows; inner product s·(x·y)."""

    ambient_dim: int
    basis: Basis
    inner_scale: Fraction = Fraction(1)
    name: str = field(default="", compare=False)

    @classmethod
    def from_basis(
        cls,
        rows: Sequence[Sequence[Number | str]],
        inner_scale: Number | str = 1,
        ambient_dim: int | None = None,
        name: str = "",
    ) -> "Lattice":
        """Build from independent rows; rows are replaced by the canonical basis."""
        vecs = [as_vector(r) for r in rows]
        if ambient_dim is None:
            if not vecs:
                raise LatticeError("ambient dimension required for an empty basis")
            ambient_dim = len(vecs[0])
        basis = canonical_basis(vecs, ambient_dim)
        if len(basis) != len(vecs):
            raise LatticeError("basis rows are linearly dependent")
        return cls._checked(ambient_dim, basis, frac(inner_scale), name)

    @classmethod
    def _checked(cls, ambient_dim: int, basis: Basis, inner_scale: Fraction, name: str = "") -> "Lattice":
        if inner_scale <= 0:
            raise LatticeError(f"inner_scale must be positive, got {inner_scale}")
        return cls(ambient_dim=ambient_dim, basis=basis, inner_scale=inner_scale, name=name)

    # -- derived data -------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def gram(self) -> Tuple[Tuple[Fraction, ...], ...]:
        s = self.inner_scale
        return tuple(
            tuple(s * dot(u, v) for v in self.basis) for u in self.basis
        )

    @cached_property
    def determinant(self) -> Fraction:
        return det(self.gram)

    @cached_property
    def _pivots(self) -> Tuple[int, ...]:
        cols = []
        for row in self.basis:
            cols.append(next(j for j, x in enumerate(row) if x != 0))
        return tuple(cols)

    @cached_property
    def _pivot_inverse(self) -> List[List[Fraction]]:
        square = [[row[j] for j in self._pivots] for row in self.basis]
        return inverse(square)

    def inner(self, u: Sequence[Number], v: Sequence[Number]) -> Fraction:
        return self.inner_scale * frac(dot(u, v))

    def norm(self, v: Sequence[Number]) -> Fraction:
        return self.inner(v, v)

    def vector(self, coords: Sequence[Number]) -> Vector:
        """Ambient vector with the given basis coordinates."""
        if self.rank == 0:
            return tuple(Fraction(0) for _ in range(self.ambient_dim))
        return tuple(frac(x) for x in vec_mat(coords, self.basis, self.ambient_dim))

    def coordinates(self, v: Sequence[Number]) -> List[Fraction] | None:
        """Rational coordinates of v in the basis, or None outside the rational span."""
        if len(v) != self.ambient_dim:
            raise LatticeError(f"vector length {len(v)} differs from ambient dimension {self.ambient_dim}")
        if self.rank == 0:
            return [] if all(frac(x) == 0 for x in v) else None
        x = [frac(c) for c in vec_mat([v[j] for j in self._pivots], self._pivot_inverse, self.rank)]
        if tuple(self.vector(x)) != tuple(frac(c) for c in v):
            return None
        return x

    def int_coordinates(self, v: Sequence[Number]) -> List[int] | None:
        x = self.coordinates(v)
        if x is None or any(c.denominator != 1 for c in x):
            return None
        return [c.numerator for c in x]

    def in_span(self, v: Sequence[Number]) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v: object) -> bool:
        if not isinstance(v, (tuple, list)):
            return False
        return self.int_coordinates(v) is not None

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.gram for x in row)

    def is_even(self) -> bool:
        return self.is_integral() and all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def scaled(self, factor: Number) -> "Lattice":
        """Same basis with inner products multiplied by factor."""
        return Lattice._checked(self.ambient_dim, self.basis, self.inner_scale * frac(factor), self.name)

    def named(self, name: str) -> "Lattice":
        return Lattice(self.ambient_dim, self.basis, self.inner_scale, name)

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"Lattice({label}rank={self.rank}, ambient={self.ambient_dim}, scale={self.inner_scale})"


@dataclass(frozen=True)
class Coset:
    lattice: Lattice
    rep: Vector

    @classmethod
    def of(cls, lattice: Lattice, rep: Sequence[Number]) -> "Coset":
        vec = as_vector(rep)
        if not lattice.in_span(vec):
            raise LatticeError("coset representative is outside the rational span of the lattice")
        return cls(lattice, vec)

    def contains(self, v: Sequence[Number]) -> bool:
        return tuple(frac(a) - b for a, b in zip(v, self.rep)) in self.lattice


def span(generators: Iterable[Sequence[Number]], ambient_dim: int, inner_scale: Number = 1, name: str = "") -> Lattice:
    """Z-span of arbitrary (possibly dependent) generators."""
    basis = canonical_basis(list(generators), ambient_dim)
    return Lattice._checked(ambient_dim, basis, frac(inner_scale), name)


def zero_lattice(ambient_dim: int, inner_scale: Number = 1) -> Lattice:
    return Lattice._checked(ambient_dim, (), frac(inner_scale))


def _same_space(a: Lattice, b: Lattice) -> None:
    if a.ambient_dim != b.ambient_dim or a.inner_scale != b.inner_scale:
        raise LatticeError("lattices live in different ambient spaces")


def direct_sum(*parts: Lattice) -> Lattice:
    """Orthogonal sum in the concatenated ambient space."""
    if not parts:
        raise LatticeError("direct sum of no lattices")
    scale = parts[0].inner_scale
    if any(p.inner_scale != scale for p in parts):
        raise LatticeError("direct sum requires a common inner_scale")
    n = sum(p.ambient_dim for p in parts)
    rows: List[Vector] = []
    offset = 0
    for p in parts:
        for b in p.basis:
            rows.append(
                tuple([Fraction(0)] * offset + list(b) + [Fraction(0)] * (n - offset - p.ambient_dim))
            )
        offset += p.ambient_dim
    return span(rows, n, scale)


def dual(lat: Lattice) -> Lattice:
    """L* = G^{-1}·B in the same ambient space."""
    if lat.rank == 0:
        return lat
    b_star = mat_mul(inverse(lat.gram), lat.basis, lat.ambient_dim)
    return span(b_star, lat.ambient_dim, lat.inner_scale)


def dual_basis(lat: Lattice) -> List[List[Fraction]]:
    """Rows b*_i with (b*_i|b_j) = delta_ij."""
    return mat_mul(inverse(lat.gram), lat.basis, lat.ambient_dim)


def glue(base: Lattice, glue_vectors: Sequence[Sequence[Number]], require_integral: bool = False) -> Lattice:
    """Z-span of base and glue vectors."""
    for v in glue_vectors:
        if not base.in_span(v):
            raise LatticeError(f"glue vector {list(map(str, v))} is outside the rational span")
    out = span(list(base.basis) + [as_vector(v) for v in glue_vectors], base.ambient_dim, base.inner_scale)
    if require_integral and not out.is_integral():
        raise LatticeError("glued lattice is not integral")
    return out


def intersect(a: Lattice, b: Lattice) -> Lattice:
    """a ∩ b through the integer kernel of [B_a; -B_b]."""
    _same_space(a, b)
    if a.rank == 0 or b.rank == 0:
        return zero_lattice(a.ambient_dim, a.inner_scale)
    stacked = [list(r) for r in a.basis] + [[-x for x in r] for r in b.basis]
    _, ints = _integral_rows(stacked)
    kernel = integer_kernel(ints)
    rows = [vec_mat(k[: a.rank], a.basis, a.ambient_dim) for k in kernel]
    return span(rows, a.ambient_dim, a.inner_scale)


def sum_lattices(a: Lattice, b: Lattice) -> Lattice:
    _same_space(a, b)
    return span(list(a.basis) + list(b.basis), a.ambient_dim, a.inner_scale)


def orthogonal_complement(lat: Lattice, sub: Lattice) -> Lattice:
    """{alpha in lat : (alpha|sub) = 0}."""
    _same_space(lat, sub)
    if sub.rank == 0:
        return lat
    pairing = [[lat.inner(u, v) for v in sub.basis] for u in lat.basis]
    _, ints = _integral_rows(pairing)
    kernel = integer_kernel(ints)
    rows = [vec_mat(k, lat.basis, lat.ambient_dim) for k in kernel]
    return span(rows, lat.ambient_dim, lat.inner_scale)


def integral_against(lat: Lattice, chi: Sequence[Number]) -> Lattice:
    """{alpha in lat : (alpha|chi) in Z}."""
    values = [lat.inner(b, chi) for b in lat.basis]
    den = lcm(*(v.denominator for v in values)) if values else 1
    if den == 1:
        return lat
    column = [[int(v * den)] for v in values] + [[den]]
    kernel = integer_kernel(column)
    rows = [vec_mat(k[: lat.rank], lat.basis, lat.ambient_dim) for k in kernel]
    return span(rows, lat.ambient_dim, lat.inner_scale)


def coordinate_matrix(sub: Lattice, sup: Lattice) -> List[List[int]]:
    """Integer coordinates of sub's basis in sup's basis; raises when sub is not inside sup."""
    _same_space(sub, sup)
    rows = []
    for b in sub.basis:
        x = sup.int_coordinates(b)
        if x is None:
            raise NotSublatticeError([str(c) for c in b])
        rows.append(x)
    return rows


def is_sublattice(sub: Lattice, sup: Lattice) -> bool:
    try:
        coordinate_matrix(sub, sup)
    except NotSublatticeError:
        return False
    return True


def index(sub: Lattice, sup: Lattice) -> int:
    """|sup : sub| for equal-rank sub ⊆ sup."""
    rows = coordinate_matrix(sub, sup)
    if sub.rank != sup.rank:
        raise LatticeError(f"index needs equal ranks, got {sub.rank} and {sup.rank}")
    if sub.rank == 0:
        return 1
    d = det(rows)
    return abs(d.numerator)


@dataclass(frozen=True)
class DiscriminantGroup:
    """
    D(L) = L*/L as a product of cyclic groups Z/d_i with lifted generators.

    ``dual_frame`` is a basis of L* adapted to L: L is spanned by
    full_factors[i]·dual_frame[i].
    """

    lattice: Lattice
    invariant_factors: Tuple[int, ...]
    generators: Tuple[Vector, ...]
    dual_frame: Tuple[Vector, ...]
    full_factors: Tuple[int, ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def is_elementary(self, p: int) -> bool:
        return all(d == p for d in self.invariant_factors)

    def reduce(self, v: Sequence[Number]) -> Tuple[int, ...]:
        """Coordinates of v + L in the cyclic generators, reduced mod d_i."""
        x = solve_left(self.dual_frame, v)
        if x is None or any(c.denominator != 1 for c in x):
            raise LatticeError("vector is not in the dual lattice")
        offset = len(self.full_factors) - self.rank
        return tuple(int(c) % d for c, d in zip(x[offset:], self.invariant_factors))

    def lift(self, coords: Sequence[int]) -> Vector:
        vec = [Fraction(0)] * self.lattice.ambient_dim
        for c, g in zip(coords, self.generators):
            if c:
                vec = [a + c * b for a, b in zip(vec, g)]
        return tuple(vec)

    def elements(self) -> Iterator[Tuple[int, ...]]:
        """All elements in lexicographic coordinate order."""

        def rec(i: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
            if i == self.rank:
                yield prefix
                return
            for c in range(self.invariant_factors[i]):
                yield from rec(i + 1, prefix + (c,))

        yield from rec(0, ())

    def p_torsion_generators(self, p: int) -> List[Vector]:
        """Lifts spanning {x in D : p·x = 0} as an F_p-space."""
        return [
            tuple(Fraction(d // p) * c for c in g)
            for d, g in zip(self.invariant_factors, self.generators)
            if d % p == 0
        ]

    def label(self) -> str:
        if not self.invariant_factors:
            return "1"
        counts: dict[int, int] = {}
        for d in self.invariant_factors:
            counts[d] = counts.get(d, 0) + 1
        return " x ".join(f"Z_{d}^{n}" if n > 1 else f"Z_{d}" for d, n in sorted(counts.items()))


def discriminant_group(lat: Lattice) -> DiscriminantGroup:
    if not lat.is_integral():
        raise LatticeError("discriminant group needs an integral lattice")
    if lat.rank == 0:
        return DiscriminantGroup(lat, (), (), (), ())
    gram = [[int(x) for x in row] for row in lat.gram]
    res = snf(gram)
    v_inv = inverse(res.V)
    frame = mat_mul(v_inv, dual_basis(lat), lat.ambient_dim)
    diag = res.diagonal
    if any(d == 0 for d in diag):
        raise LatticeError("Gram matrix is singular")
    frame_t = tuple(tuple(frac(x) for x in row) for row in frame)
    start = next((i for i, d in enumerate(diag) if d > 1), len(diag))
    factors = tuple(diag[start:])
    gens = frame_t[start:]
    group = DiscriminantGroup(lat, factors, gens, frame_t, tuple(diag))
    logger.debug(f"D({lat.name or 'L'}) = {group.label()}")
    return group

