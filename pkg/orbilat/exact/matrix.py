"""
Dense exact matrices over Z and Q.

Entries are Python ints or ``fractions.Fraction`` (always reduced, positive
denominator), so equality is syntactic.  Matrices are plain row lists at the
function level and ``RatMatrix`` at API boundaries.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Sequence, Tuple

from ..core.errors import InputError

Number = int | Fraction
Vector = Tuple[Fraction, ...]


class SingularMatrixError(InputError):
    pass


def frac(x: Number | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def to_fraction_rows(rows: Iterable[Iterable[Number | str]]) -> List[List[Fraction]]:
    return [[frac(x) for x in row] for row in rows]


def as_vector(values: Iterable[Number | str]) -> Vector:
    return tuple(frac(x) for x in values)


def identity(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> List[List[int]]:
    return [[0] * cols for _ in range(rows)]


def transpose(a: Sequence[Sequence[Number]]) -> List[List[Number]]:
    return [list(col) for col in zip(*a)]


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    return sum((x * y for x, y in zip(u, v)), 0)


def vec_mat(v: Sequence[Number], m: Sequence[Sequence[Number]], width: int | None = None) -> List[Number]:
    """Row vector times matrix."""
    if width is None:
        width = len(m[0]) if m else 0
    out: List[Number] = [0] * width
    for coeff, row in zip(v, m):
        if coeff:
            for j in range(width):
                out[j] += coeff * row[j]
    return out


def mat_mul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]], width: int | None = None) -> List[List[Number]]:
    if width is None:
        width = len(b[0]) if b else 0
    return [vec_mat(row, b, width) for row in a]


def mat_add(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> List[List[Number]]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> List[List[Number]]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: Number, a: Sequence[Sequence[Number]]) -> List[List[Number]]:
    return [[c * x for x in row] for row in a]


def mat_pow(m: Sequence[Sequence[Number]], k: int) -> List[List[Number]]:
    n = len(m)
    result: List[List[Number]] = [list(r) for r in identity(n)]
    base = [list(r) for r in m]
    while k > 0:
        if k & 1:
            result = mat_mul(result, base, n)
        base = mat_mul(base, base, n)
        k >>= 1
    return result


def rref(m: Sequence[Sequence[Number]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Q; returns the nonzero rows and pivot columns."""
    a = to_fraction_rows(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: Sequence[Sequence[Number]]) -> int:
    return len(rref(m)[1])


def det(m: Sequence[Sequence[Number]]) -> Fraction:
    a = to_fraction_rows(m)
    n = len(a)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            result = -result
        result *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def inverse(m: Sequence[Sequence[Number]]) -> List[List[Fraction]]:
    n = len(m)
    aug = [list(map(frac, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def solve_left(basis: Sequence[Sequence[Number]], v: Sequence[Number]) -> List[Fraction] | None:
    """Return x with x·basis = v for independent rows, or None when v is outside the row span."""
    if not basis:
        return [] if all(x == 0 for x in v) else None
    t = to_fraction_rows(transpose(basis))
    r = len(basis)
    aug = [row + [frac(x)] for row, x in zip(t, v)]
    red, pivots = rref(aug)
    if r in pivots:
        return None
    x = [Fraction(0)] * r
    for row, c in zip(red, pivots):
        x[c] = row[r]
    return x


def common_denominator(rows: Iterable[Iterable[Number]]) -> int:
    d = 1
    for row in rows:
        for x in row:
            if isinstance(x, Fraction):
                d = lcm(d, x.denominator)
    return d


def is_integral(rows: Iterable[Iterable[Number]]) -> bool:
    return all(frac(x).denominator == 1 for row in rows for x in row)


def to_int_rows(rows: Iterable[Iterable[Number]]) -> List[List[int]]:
    out: List[List[int]] = []
    for row in rows:
        out_row = []
        for x in row:
            x = frac(x)
            if x.denominator != 1:
                raise InputError(f"entry {x} is not an integer")
            out_row.append(x.numerator)
        out.append(out_row)
    return out


@dataclass(frozen=True)
class RatMatrix:
    """Immutable rational matrix in canonical reduced form."""

    rows: Tuple[Tuple[Fraction, ...], ...]
    ncols: int

    @classmethod
    def of(cls, rows: Sequence[Sequence[Number | str]], ncols: int | None = None) -> "RatMatrix":
        fixed = tuple(tuple(frac(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(fixed[0]) if fixed else 0
        if any(len(row) != ncols for row in fixed):
            raise InputError("ragged matrix")
        return cls(rows=fixed, ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.of(identity(n), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix.of(mat_mul(self.rows, other.rows, other.ncols), other.ncols)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix.of(mat_sub(self.rows, other.rows), self.ncols)

    def scaled(self, c: Number) -> "RatMatrix":
        return RatMatrix.of(mat_scale(c, self.rows), self.ncols)

    def transpose(self) -> "RatMatrix":
        return RatMatrix.of(transpose(self.rows), self.nrows)

    def inverse(self) -> "RatMatrix":
        return RatMatrix.of(inverse(self.rows), self.nrows)

    def det(self) -> Fraction:
        return det(self.rows)

    def is_integral(self) -> bool:
        return is_integral(self.rows)

    def to_int_rows(self) -> List[List[int]]:
        return to_int_rows(self.rows)
