"""
Exact LLL reduction on a Gram matrix.

Works on the Gram matrix only and returns the unimodular transform T, so the
reduced basis is T·B and its Gram matrix T·G·Tᵀ.  All quantities are
Fractions; size reduction rounds with floor(mu + 1/2).
"""

from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import List, Sequence, Tuple

from ..config import get_settings
from ..core.errors import LatticeError
from ..exact.matrix import Number, frac, identity


def _parse_delta(delta: Number | str | None) -> Fraction:
    if delta is None:
        delta = get_settings().lll_delta
    d = frac(delta)
    if not Fraction(1, 4) < d <= 1:
        raise LatticeError(f"LLL delta must lie in (1/4, 1], got {d}")
    return d


def lll_transform(gram: Sequence[Sequence[Number]], delta: Number | str | None = None) -> List[List[int]]:
    """Unimodular T such that the rows of T·B form an LLL-reduced basis."""
    key = tuple(tuple(frac(x) for x in row) for row in gram)
    return [list(row) for row in _lll_cached(key, _parse_delta(delta))]


@lru_cache(maxsize=256)
def _lll_cached(gram: Tuple[Tuple[Fraction, ...], ...], dl: Fraction) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in _lll(gram, dl))


def _lll(gram: Sequence[Sequence[Fraction]], dl: Fraction) -> List[List[int]]:
    n = len(gram)
    if n <= 1:
        return identity(n)
    g = [[frac(x) for x in row] for row in gram]
    t = identity(n)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bst = [Fraction(0)] * n

    def red(k: int, l: int) -> None:
        if abs(mu[k][l]) <= Fraction(1, 2):
            return
        q = floor(mu[k][l] + Fraction(1, 2))
        t[k] = [a - q * b for a, b in zip(t[k], t[l])]
        g[k] = [a - q * b for a, b in zip(g[k], g[l])]
        for j in range(n):
            g[j][k] -= q * g[j][l]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k: int, kmax: int) -> None:
        t[k], t[k - 1] = t[k - 1], t[k]
        g[k], g[k - 1] = g[k - 1], g[k]
        for row in g:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        b = bst[k] + m * m * bst[k - 1]
        mu[k][k - 1] = m * bst[k - 1] / b
        bst[k] = bst[k - 1] * bst[k] / b
        bst[k - 1] = b
        for i in range(k + 1, kmax + 1):
            s = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * s
            mu[i][k - 1] = s + mu[k][k - 1] * mu[i][k]

    bst[0] = g[0][0]
    if bst[0] <= 0:
        raise LatticeError("Gram matrix is not positive definite")
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                s = g[k][j]
                for i in range(j):
                    s -= mu[j][i] * mu[k][i] * bst[i]
                mu[k][j] = s / bst[j]
            s = g[k][k]
            for j in range(k):
                s -= mu[k][j] * mu[k][j] * bst[j]
            if s <= 0:
                raise LatticeError("Gram matrix is not positive definite")
            bst[k] = s
        red(k, k - 1)
        if bst[k] < (dl - mu[k][k - 1] ** 2) * bst[k - 1]:
            swap(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return t


def reduce_binary_form(gram: Sequence[Sequence[Number]]) -> Tuple[Fraction, Fraction, Fraction]:
    """
    Lagrange reduction of a positive definite 2x2 Gram matrix up to GL_2(Z).

    Returns (a, b, c) with 0 <= 2b <= a <= c; two binary forms are
    GL_2(Z)-equivalent exactly when these triples agree.
    """
    if len(gram) != 2 or any(len(r) != 2 for r in gram):
        raise LatticeError("binary form reduction needs a 2x2 Gram matrix")
    a, b, c = frac(gram[0][0]), frac(gram[0][1]), frac(gram[1][1])
    if a <= 0 or a * c - b * b <= 0:
        raise LatticeError("Gram matrix is not positive definite")
    while True:
        q = floor(b / a + Fraction(1, 2))
        b, c = b - q * a, c - 2 * q * b + q * q * a
        if c < a:
            a, c = c, a
            continue
        break
    return a, abs(b), c
