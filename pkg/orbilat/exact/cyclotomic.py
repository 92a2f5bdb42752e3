"""
Exact arithmetic in the cyclotomic field Q(zeta_k).

Elements are coefficient vectors of length phi(k) modulo the k-th cyclotomic
polynomial.  Products reduce with the (monic, integral) polynomial directly;
inverses go through sympy's polynomial extended gcd.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from sympy import Poly, QQ, Rational, cyclotomic_poly, symbols

from ..core.errors import InputError
from .matrix import Number, frac

_x = symbols("x")


@lru_cache(maxsize=None)
def _phi_coeffs(k: int) -> Tuple[int, ...]:
    """Coefficients of Phi_k, lowest degree first."""
    if k < 1:
        raise InputError(f"conductor must be positive, got {k}")
    poly = Poly(cyclotomic_poly(k, _x), _x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def phi_degree(k: int) -> int:
    return len(_phi_coeffs(k)) - 1


def _reduce(coeffs: List[Fraction], k: int) -> Tuple[Fraction, ...]:
    phi = _phi_coeffs(k)
    d = len(phi) - 1
    c = list(coeffs)
    for top in range(len(c) - 1, d - 1, -1):
        lead = c[top]
        if lead:
            for i in range(d + 1):
                c[top - d + i] -= lead * phi[i]
    c = c[:d] + [Fraction(0)] * max(0, d - len(c))
    return tuple(c)


@dataclass(frozen=True)
class CycloElem:
    """Element of Q(zeta_k), stored as residues mod Phi_k."""

    k: int
    coeffs: Tuple[Fraction, ...]

    @classmethod
    def from_poly(cls, k: int, coeffs: Iterable[Number]) -> "CycloElem":
        return cls(k, _reduce([frac(c) for c in coeffs], k))

    @classmethod
    def scalar(cls, k: int, value: Number) -> "CycloElem":
        return cls.from_poly(k, [value])

    @classmethod
    def zero(cls, k: int) -> "CycloElem":
        return cls.scalar(k, 0)

    @classmethod
    def one(cls, k: int) -> "CycloElem":
        return cls.scalar(k, 1)

    def _check(self, other: "CycloElem") -> None:
        if self.k != other.k:
            raise InputError(f"conductor mismatch: {self.k} vs {other.k}")

    def _lift(self, other: "CycloElem | Number") -> "CycloElem":
        if isinstance(other, CycloElem):
            self._check(other)
            return other
        return CycloElem.scalar(self.k, other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "CycloElem | Number") -> "CycloElem":
        o = self._lift(other)
        return CycloElem(self.k, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.k, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycloElem | Number") -> "CycloElem":
        return self + (-self._lift(other))

    def __rsub__(self, other: Number) -> "CycloElem":
        return self._lift(other) - self

    def __mul__(self, other: "CycloElem | Number") -> "CycloElem":
        if not isinstance(other, CycloElem):
            c = frac(other)
            return CycloElem(self.k, tuple(a * c for a in self.coeffs))
        self._check(other)
        d = len(self.coeffs)
        prod = [Fraction(0)] * max(1, 2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloElem(self.k, _reduce(prod, self.k))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycloElem":
        if n < 0:
            return cyclo_inv(self) ** (-n)
        result = CycloElem.one(self.k)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other: "CycloElem | Number") -> "CycloElem":
        if not isinstance(other, CycloElem):
            c = frac(other)
            if c == 0:
                raise InputError("division by zero in cyclotomic field")
            return self * (1 / c)
        return self * cyclo_inv(other)

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"CycloElem(k={self.k}, {' + '.join(terms) or '0'})"


def zeta(k: int, power: int = 1) -> CycloElem:
    """zeta_k ** power, with the exponent taken mod k."""
    e = power % k
    coeffs = [Fraction(0)] * (e + 1)
    coeffs[e] = Fraction(1)
    return CycloElem.from_poly(k, coeffs)


def cyclo_mul(a: CycloElem, b: CycloElem) -> CycloElem:
    return a * b


def cyclo_inv(a: CycloElem) -> CycloElem:
    if a.is_zero():
        raise InputError("division by zero in cyclotomic field")
    mod = Poly(cyclotomic_poly(a.k, _x), _x, domain=QQ)
    num = Poly(list(reversed([Rational(c.numerator, c.denominator) for c in a.coeffs])), _x, domain=QQ)
    inv = num.invert(mod)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
    return CycloElem.from_poly(a.k, coeffs)


CycloMatrixRows = List[List[CycloElem]]


def cmat_identity(n: int, k: int) -> CycloMatrixRows:
    return [[CycloElem.one(k) if i == j else CycloElem.zero(k) for j in range(n)] for i in range(n)]


def cmat_mul(a: Sequence[Sequence[CycloElem]], b: Sequence[Sequence[CycloElem]]) -> CycloMatrixRows:
    n, m = len(a), len(b[0])
    k = a[0][0].k
    out: CycloMatrixRows = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = CycloElem.zero(k)
            for t in range(len(b)):
                if not a[i][t].is_zero() and not b[t][j].is_zero():
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def cmat_scale(c: Number | CycloElem, a: Sequence[Sequence[CycloElem]]) -> CycloMatrixRows:
    return [[x * c for x in row] for row in a]


def cmat_pow(a: Sequence[Sequence[CycloElem]], n: int) -> CycloMatrixRows:
    k = a[0][0].k
    result = cmat_identity(len(a), k)
    base = [list(r) for r in a]
    while n:
        if n & 1:
            result = cmat_mul(result, base)
        base = cmat_mul(base, base)
        n >>= 1
    return result


def cmat_equal(a: Sequence[Sequence[CycloElem]], b: Sequence[Sequence[CycloElem]]) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)) and len(a) == len(b)
