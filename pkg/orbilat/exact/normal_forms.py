"""
Hermite and Smith normal forms over Z with unimodular transforms.

The Smith form follows the elementary-operations scheme with the smallest
nonzero absolute value as pivot, the way ``smith_tool`` style reducers do it,
but on plain Python ints so no entry ever leaves Z.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .matrix import Number, identity, to_int_rows


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def hnf(matrix: Sequence[Sequence[Number]]) -> Tuple[List[List[int]], List[List[int]]]:
    """
    Row Hermite normal form.

    Returns (H, U) with H = U·M, U unimodular.  Nonzero rows of H come first,
    pivots are positive and entries above a pivot lie in [0, pivot).
    """
    h = to_int_rows(matrix)
    r = len(h)
    c = len(h[0]) if r else 0
    u = identity(r)
    pivot_row = 0
    for col in range(c):
        if pivot_row >= r:
            break
        for i in range(pivot_row + 1, r):
            b = h[i][col]
            if b == 0:
                continue
            a = h[pivot_row][col]
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            for m in (h, u):
                top, low = m[pivot_row], m[i]
                m[pivot_row] = [x * s + y * t for s, t in zip(top, low)]
                m[i] = [-bg * s + ag * t for s, t in zip(top, low)]
        p = h[pivot_row][col]
        if p == 0:
            continue
        if p < 0:
            h[pivot_row] = [-v for v in h[pivot_row]]
            u[pivot_row] = [-v for v in u[pivot_row]]
            p = -p
        for i in range(pivot_row):
            q = h[i][col] // p
            if q:
                h[i] = [s - q * t for s, t in zip(h[i], h[pivot_row])]
                u[i] = [s - q * t for s, t in zip(u[i], u[pivot_row])]
        pivot_row += 1
    return h, u


def hnf_rank(h: Sequence[Sequence[int]]) -> int:
    return sum(1 for row in h if any(row))


@dataclass(frozen=True)
class SnfResult:
    """U·M·V = S with S diagonal and d_1 | d_2 | ... ; U, V unimodular."""

    S: Tuple[Tuple[int, ...], ...]
    U: Tuple[Tuple[int, ...], ...]
    V: Tuple[Tuple[int, ...], ...]

    @property
    def diagonal(self) -> List[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.S[0]) if self.S else 0))]

    @property
    def invariant_factors(self) -> List[int]:
        """Nontrivial factors (>= 2), the torsion part of the cokernel."""
        return [d for d in self.diagonal if d > 1]


def _swap_rows(m: List[List[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: List[List[int]], i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def snf(matrix: Sequence[Sequence[Number]]) -> SnfResult:
    s = to_int_rows(matrix)
    r = len(s)
    c = len(s[0]) if r else 0
    u = identity(r)
    v = identity(c)

    def move_smallest(t: int) -> bool:
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = s[i][j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            return False
        _, i, j = best
        if i != t:
            _swap_rows(s, t, i)
            _swap_rows(u, t, i)
        if j != t:
            _swap_cols(s, t, j)
            _swap_cols(v, t, j)
        return True

    t = 0
    while t < min(r, c):
        if not move_smallest(t):
            break
        while True:
            clean = True
            pivot = s[t][t]
            for i in range(t + 1, r):
                q = s[i][t] // pivot
                if q:
                    s[i] = [a - q * b for a, b in zip(s[i], s[t])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[t])]
                if s[i][t] != 0:
                    clean = False
            for j in range(t + 1, c):
                q = s[t][j] // pivot
                if q:
                    for row in s:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                if s[t][j] != 0:
                    clean = False
            if not clean:
                _bring_min_of_cross(s, u, v, t, r, c)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, r) for j in range(t + 1, c) if s[i][j] % pivot != 0),
                None,
            )
            if bad is None:
                break
            i, _ = bad
            s[t] = [a + b for a, b in zip(s[t], s[i])]
            u[t] = [a + b for a, b in zip(u[t], u[i])]
        if s[t][t] < 0:
            s[t] = [-a for a in s[t]]
            u[t] = [-a for a in u[t]]
        t += 1
    return SnfResult(
        S=tuple(map(tuple, s)), U=tuple(map(tuple, u)), V=tuple(map(tuple, v))
    )


def _bring_min_of_cross(s: List[List[int]], u: List[List[int]], v: List[List[int]], t: int, r: int, c: int) -> None:
    best = (abs(s[t][t]), t, t)
    for i in range(t + 1, r):
        if s[i][t] != 0 and abs(s[i][t]) < best[0]:
            best = (abs(s[i][t]), i, t)
    for j in range(t + 1, c):
        if s[t][j] != 0 and abs(s[t][j]) < best[0]:
            best = (abs(s[t][j]), t, j)
    _, i, j = best
    if i != t:
        _swap_rows(s, t, i)
        _swap_rows(u, t, i)
    if j != t:
        _swap_cols(s, t, j)
        _swap_cols(v, t, j)


def integer_kernel(a: Sequence[Sequence[Number]]) -> List[List[int]]:
    """Saturated Z-basis (in Hermite form) of {x in Z^r : x·A = 0}."""
    r = len(a)
    if r == 0:
        return []
    if not a[0]:
        return identity(r)
    h, u = hnf(a)
    k = hnf_rank(h)
    kernel = u[k:]
    if not kernel:
        return []
    kh, _ = hnf(kernel)
    return [row for row in kh if any(row)]
