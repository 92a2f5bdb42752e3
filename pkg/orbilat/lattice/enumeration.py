"""
Exact short-vector enumeration (Fincke–Pohst) in lattices and cosets.

The quadratic form is split as Σ q_ii (y_i + Σ_{j>i} q_ij y_j)² and then
scaled to integers, so the inner loop only sees Python ints.  An LLL
pre-reduction of the Gram matrix keeps the search tree small.
"""

from collections import Counter
from fractions import Fraction
from math import isqrt, lcm
from typing import Dict, Iterator, List, Sequence, Tuple

from ..core.budget import Budget
from ..core.errors import LatticeError
from ..exact.matrix import Number, Vector, frac, inverse, mat_mul, transpose, vec_mat
from ..utils.logger import get_logger
from .core import Lattice
from .reduction import lll_transform

logger = get_logger(__name__)

_CHECK_EVERY = 4096


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _decompose(gram: Sequence[Sequence[Fraction]]) -> Tuple[List[Fraction], List[List[Fraction]]]:
    n = len(gram)
    q = [[frac(x) for x in row] for row in gram]
    for i in range(n):
        if q[i][i] <= 0:
            raise LatticeError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    diag = [q[i][i] for i in range(n)]
    upper = [[q[i][j] if j > i else Fraction(0) for j in range(n)] for i in range(n)]
    return diag, upper


def _walk(
    gram: Sequence[Sequence[Fraction]],
    shift: Sequence[Fraction],
    bound: Fraction,
    budget: Budget | None,
) -> Iterator[Tuple[Tuple[int, ...], Fraction]]:
    """Yield (x, norm) for every integer x with Q(x + shift) <= bound."""
    n = len(gram)
    diag, upper = _decompose(gram)
    d_off = lcm(*(x.denominator for row in upper for x in row)) if n > 1 else 1
    e_den = lcm(*(x.denominator for x in diag))
    den = lcm(*(x.denominator for x in shift)) if shift else 1
    a = [int(c * den) for c in shift]
    m = [[int(x * d_off) for x in row] for row in upper]
    e = [int(x * e_den) for x in diag]
    scale = e_den * den * den * d_off * d_off
    r0 = (bound * scale).numerator // (bound * scale).denominator
    if r0 < 0:
        return
    step = d_off * den

    x = [0] * n
    z = [0] * n
    hi = [0] * n
    s = [0] * n
    rem = [0] * (n + 1)
    rem[n] = r0
    nodes = 0

    def open_level(i: int) -> None:
        acc = 0
        row = m[i]
        for j in range(i + 1, n):
            if row[j]:
                acc += row[j] * z[j]
        s[i] = acc
        t = isqrt(rem[i + 1] // e[i])
        base = acc + d_off * a[i]
        x[i] = _ceil_div(-t - base, step)
        hi[i] = (t - base) // step

    i = n - 1
    open_level(i)
    while True:
        if x[i] > hi[i]:
            i += 1
            if i == n:
                return
            x[i] += 1
            continue
        nodes += 1
        if budget is not None and nodes % _CHECK_EVERY == 0:
            budget.check()
        zi = den * x[i] + a[i]
        y = d_off * zi + s[i]
        r = rem[i + 1] - e[i] * y * y
        if r < 0:
            x[i] += 1
            continue
        z[i] = zi
        if i == 0:
            yield tuple(x), Fraction(r0 - r, scale)
            x[0] += 1
            continue
        rem[i] = r
        i -= 1
        open_level(i)


def iter_coset_vectors(
    lat: Lattice,
    bound: Number,
    coset_rep: Sequence[Number] | None = None,
    budget: Budget | None = None,
    reduce: bool = True,
) -> Iterator[Tuple[Tuple[int, ...], Fraction]]:
    """
    Unordered stream of (x, norm) with x integer coordinates in lat's basis and
    norm((rep) + x·B) <= bound.
    """
    bound = frac(bound)
    if bound < 0:
        raise LatticeError("enumeration bound must be non-negative")
    n = lat.rank
    if coset_rep is None:
        c = [Fraction(0)] * n
    else:
        coords = lat.coordinates(coset_rep)
        if coords is None:
            raise LatticeError("coset representative is outside the rational span of the lattice")
        c = coords
    if n == 0:
        yield (), Fraction(0)
        return
    if reduce and n > 1:
        t = lll_transform(lat.gram)
    else:
        t = [[int(i == j) for j in range(n)] for i in range(n)]
    g2 = mat_mul(mat_mul(t, lat.gram, n), transpose(t), n)
    t_inv = inverse(t)
    shift = [frac(v) for v in vec_mat(c, t_inv, n)]
    for xp, nrm in _walk(g2, shift, bound, budget):
        x = vec_mat(xp, t, n)
        yield tuple(int(v) for v in x), nrm


def enumerate_up_to_norm(
    lat: Lattice,
    bound: Number,
    coset_rep: Sequence[Number] | None = None,
    budget: Budget | None = None,
) -> List[Vector]:
    """
    All vectors v of lat (or coset_rep + lat) with (v|v) <= bound.

    Ordered lexicographically by the integer coordinates of v - coset_rep.
    """
    hits = sorted(x for x, _ in iter_coset_vectors(lat, bound, coset_rep, budget))
    rep = None if coset_rep is None else tuple(frac(v) for v in coset_rep)
    out = []
    for x in hits:
        v = lat.vector(x)
        if rep is not None:
            v = tuple(a + b for a, b in zip(v, rep))
        out.append(v)
    return out


def vectors_of_norm(
    lat: Lattice, norm: Number, coset_rep: Sequence[Number] | None = None, budget: Budget | None = None
) -> List[Vector]:
    target = frac(norm)
    return [v for v in enumerate_up_to_norm(lat, target, coset_rep, budget) if lat.norm(v) == target]


def count_by_norm(
    lat: Lattice, max_norm: Number, coset_rep: Sequence[Number] | None = None, budget: Budget | None = None
) -> Dict[Fraction, int]:
    counts: Counter[Fraction] = Counter()
    for _, nrm in iter_coset_vectors(lat, max_norm, coset_rep, budget):
        counts[nrm] += 1
    return dict(sorted(counts.items()))


def theta_prefix(lat: Lattice, max_norm: int, budget: Budget | None = None) -> List[Tuple[int, int]]:
    """[(norm, count)] for norms 0, 2, ..., max_norm of an even lattice."""
    if not lat.is_even():
        raise LatticeError("theta_prefix needs an even lattice")
    if max_norm < 0 or max_norm % 2:
        raise LatticeError(f"max_norm must be a non-negative even integer, got {max_norm}")
    counts = count_by_norm(lat, max_norm, budget=budget)
    if lat.rank == 0:
        return [(0, 1)]
    logger.debug(f"theta prefix of {lat!r} up to {max_norm}: {counts}")
    return [(k, counts.get(Fraction(k), 0)) for k in range(0, max_norm + 1, 2)]


def is_rootless(lat: Lattice, budget: Budget | None = None) -> bool:
    for _, nrm in iter_coset_vectors(lat, 2, budget=budget):
        if nrm == 2:
            return False
    return True


def short_representative(lat: Lattice, rep: Sequence[Number]) -> Vector:
    """rep minus the lattice vector obtained by rounding in an LLL-reduced basis."""
    coords = lat.coordinates(rep)
    if coords is None:
        raise LatticeError("coset representative is outside the rational span of the lattice")
    if lat.rank == 0:
        return tuple(frac(v) for v in rep)
    t = lll_transform(lat.gram)
    reduced = vec_mat(coords, inverse(t), lat.rank)
    shift = vec_mat([round(frac(c)) for c in reduced], t, lat.rank)
    return tuple(frac(a) - b for a, b in zip(rep, lat.vector(shift)))


def coset_minimum_norm(lat: Lattice, rep: Sequence[Number], budget: Budget | None = None) -> Fraction:
    """Minimum of (v|v) over rep + lat, by doubling the search radius."""
    short = short_representative(lat, rep)
    top = lat.norm(short)
    bound = min(top, Fraction(2))
    while True:
        found = [nrm for _, nrm in iter_coset_vectors(lat, bound, short, budget)]
        if found:
            return min(found)
        bound = min(2 * bound, top)


def minimum_norm(lat: Lattice, budget: Budget | None = None) -> Fraction | None:
    """Smallest nonzero norm, or None for the zero lattice."""
    if lat.rank == 0:
        return None
    bound = min(lat.gram[i][i] for i in range(lat.rank))
    found = [nrm for x, nrm in iter_coset_vectors(lat, bound, budget=budget) if any(x)]
    return min(found)
