"""
Linear codes over Z_p backed by galois field arrays.

Generator matrices are always kept in reduced row-echelon form, so two codes
are equal exactly when their (p, length, gen) triples agree.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

import galois
import numpy as np
from sympy import isprime

from ..config import get_settings
from ..core.errors import BudgetExceeded, CodeError
from ..utils.logger import get_logger

logger = get_logger(__name__)

Word = Tuple[int, ...]

_CHUNK = 1 << 15


@lru_cache(maxsize=None)
def field(p: int) -> type:
    if not isprime(p):
        raise CodeError(f"code alphabet must be a prime field, got p={p}")
    return galois.GF(p)


def _rref(p: int, rows: Sequence[Sequence[int]], length: int) -> Tuple[Word, ...]:
    if not rows:
        return ()
    gf = field(p)
    arr = gf(np.array([[int(x) % p for x in r] for r in rows], dtype=int).reshape(len(rows), length))
    red = arr.row_reduce()
    return tuple(tuple(int(x) for x in r) for r in np.asarray(red) if any(r))


@dataclass(frozen=True)
class CodeZp:
    """Linear code of the given length over Z_p."""

    p: int
    length: int
    gen: Tuple[Word, ...]

    @classmethod
    def from_generators(cls, p: int, rows: Sequence[Sequence[int]], length: int | None = None) -> "CodeZp":
        if length is None:
            if not rows:
                raise CodeError("length required for a code without generators")
            length = len(rows[0])
        if any(len(r) != length for r in rows):
            raise CodeError(f"generator rows must have length {length}")
        return cls(p, length, _rref(p, rows, length))

    @classmethod
    def zero(cls, p: int, length: int) -> "CodeZp":
        field(p)
        return cls(p, length, ())

    @classmethod
    def full(cls, p: int, length: int) -> "CodeZp":
        return cls.from_generators(p, [[int(i == j) for j in range(length)] for i in range(length)], length)

    @property
    def dim(self) -> int:
        return len(self.gen)

    @property
    def size(self) -> int:
        return self.p ** self.dim

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.array(self.gen, dtype=np.int64).reshape(self.dim, self.length)

    def encode(self, coeffs: Sequence[int]) -> Word:
        return tuple(int(x) for x in (np.array(coeffs, dtype=np.int64) @ self.matrix) % self.p)

    def contains(self, word: Sequence[int]) -> bool:
        if len(word) != self.length:
            return False
        extended = _rref(self.p, list(self.gen) + [tuple(word)], self.length)
        return len(extended) == self.dim

    def __contains__(self, word: object) -> bool:
        return isinstance(word, (tuple, list)) and self.contains(word)

    def span_with(self, word: Sequence[int]) -> "CodeZp":
        return CodeZp(self.p, self.length, _rref(self.p, list(self.gen) + [tuple(word)], self.length))

    def codeword_chunks(self, limit: int | None = None) -> Iterator[np.ndarray]:
        """All codewords, in lexicographic order of their coefficient vectors."""
        if limit is None:
            limit = get_settings().code_enumeration_limit
        total = self.size
        if total > limit:
            raise BudgetExceeded(f"code has {total} words, enumeration limit is {limit}")
        powers = np.array([self.p ** (self.dim - 1 - i) for i in range(self.dim)], dtype=np.int64)
        for start in range(0, total, _CHUNK):
            idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
            if self.dim == 0:
                yield np.zeros((len(idx), self.length), dtype=np.int64)
                continue
            coeffs = (idx[:, None] // powers[None, :]) % self.p
            yield (coeffs @ self.matrix) % self.p

    def codewords(self, limit: int | None = None) -> Iterator[Word]:
        for chunk in self.codeword_chunks(limit):
            for row in chunk:
                yield tuple(int(x) for x in row)

    def __repr__(self) -> str:
        rows = ", ".join("(" + ",".join(map(str, r)) + ")" for r in self.gen)
        return f"CodeZp(p={self.p}, t={self.length}, <{rows}>)"


def hamming_weight(word: Sequence[int]) -> int:
    return sum(1 for x in word if x != 0)


def inner(p: int, a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b)) % p


def dual_code(code: CodeZp) -> CodeZp:
    if code.dim == 0:
        return CodeZp.full(code.p, code.length)
    gf = field(code.p)
    kernel = gf(code.matrix % code.p).null_space()
    rows = [tuple(int(x) for x in r) for r in np.asarray(kernel)]
    return CodeZp(code.p, code.length, _rref(code.p, rows, code.length))


def is_self_orthogonal(code: CodeZp) -> bool:
    """All pairwise products of generator rows vanish, self-products included."""
    for i, a in enumerate(code.gen):
        for b in code.gen[i:]:
            if inner(code.p, a, b):
                return False
    return True


def weight_distribution(code: CodeZp, limit: int | None = None) -> Dict[int, int]:
    counts = np.zeros(code.length + 1, dtype=np.int64)
    for chunk in code.codeword_chunks(limit):
        counts += np.bincount(np.count_nonzero(chunk, axis=1), minlength=code.length + 1)
    return {w: int(c) for w, c in enumerate(counts) if c}


def max_weight_in_dual(code: CodeZp, limit: int | None = None) -> int:
    return max(weight_distribution(dual_code(code), limit))


def first_codeword_of_weight(code: CodeZp, w: int, limit: int | None = None) -> Word | None:
    """Smallest codeword (in coefficient order) of Hamming weight w."""
    for chunk in code.codeword_chunks(limit):
        hits = np.nonzero(np.count_nonzero(chunk, axis=1) == w)[0]
        if len(hits):
            return tuple(int(x) for x in chunk[hits[0]])
    return None


@dataclass(frozen=True)
class MonomialMap:
    """Signed permutation: coordinate i goes to perm[i], multiplied by signs[i]."""

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    @classmethod
    def identity(cls, t: int) -> "MonomialMap":
        return cls(tuple(range(t)), (1,) * t)

    def apply(self, word: Sequence[int], p: int) -> Word:
        out = [0] * len(word)
        for i, x in enumerate(word):
            out[self.perm[i]] = (self.signs[i] * x) % p
        return tuple(out)

    def apply_code(self, code: CodeZp) -> CodeZp:
        return CodeZp.from_generators(code.p, [self.apply(r, code.p) for r in code.gen], code.length)


def coordinate_profiles(code: CodeZp, limit: int | None = None) -> List[Tuple[Tuple[Tuple[int, int], int], ...]]:
    """Per coordinate, the multiset of (word weight, min(c_i, p - c_i))."""
    profiles: List[Counter] = [Counter() for _ in range(code.length)]
    p = code.p
    for chunk in code.codeword_chunks(limit):
        weights = np.count_nonzero(chunk, axis=1)
        folded = np.minimum(chunk, (p - chunk) % p)
        for i in range(code.length):
            pairs = np.stack([weights, folded[:, i]], axis=1)
            keys, counts = np.unique(pairs, axis=0, return_counts=True)
            for (w, v), c in zip(keys, counts):
                profiles[i][(int(w), int(v))] += int(c)
    return [tuple(sorted(c.items())) for c in profiles]


def fingerprint(code: CodeZp, limit: int | None = None) -> Tuple:
    """Invariant under signed permutations; equal for equivalent codes."""
    return (
        code.p,
        code.length,
        code.dim,
        tuple(sorted(weight_distribution(code, limit).items())),
        tuple(sorted(coordinate_profiles(code, limit))),
    )


def _projection_key(p: int, gen: np.ndarray, cols: Sequence[int], signs: Sequence[int]) -> Tuple[Word, ...]:
    if gen.shape[0] == 0 or not cols:
        return ()
    sub = (gen[:, list(cols)] * np.array(signs, dtype=np.int64)[None, :]) % p
    return _rref(p, sub.tolist(), len(cols))


def monomial_equivalent(c1: CodeZp, c2: CodeZp) -> MonomialMap | None:
    """
    Find f in {±1}^t ⋊ S_t with f(c1) = c2.

    Backtracking over coordinates of c1; candidate images must share the
    coordinate profile, and after each assignment the projections of both
    codes onto the assigned coordinates must coincide.
    """
    if (c1.p, c1.length, c1.dim) != (c2.p, c2.length, c2.dim):
        return None
    if c1 == c2:
        return MonomialMap.identity(c1.length)
    if weight_distribution(c1) != weight_distribution(c2):
        return None
    prof1, prof2 = coordinate_profiles(c1), coordinate_profiles(c2)
    if sorted(prof1) != sorted(prof2):
        return None
    p, t = c1.p, c1.length
    sign_options = (1,) if p == 2 else (1, -1)
    g1, g2 = c1.matrix, c2.matrix
    order = sorted(range(t), key=lambda i: sum(1 for j in range(t) if prof2[j] == prof1[i]))
    assigned: List[int] = []
    images: List[int] = []
    signs: List[int] = []
    used = [False] * t

    def rec(depth: int) -> bool:
        if depth == t:
            return True
        i = order[depth]
        for j in range(t):
            if used[j] or prof2[j] != prof1[i]:
                continue
            for s in sign_options:
                assigned.append(i)
                images.append(j)
                signs.append(s)
                ok = _projection_key(p, g1, assigned, signs) == _projection_key(p, g2, images, [1] * len(images))
                if ok:
                    used[j] = True
                    if rec(depth + 1):
                        return True
                    used[j] = False
                assigned.pop()
                images.pop()
                signs.pop()
        return False

    if not rec(0):
        return None
    perm = [0] * t
    sg = [1] * t
    for i, j, s in zip(assigned, images, signs):
        perm[i] = j
        sg[i] = s
    witness = MonomialMap(tuple(perm), tuple(sg))
    if witness.apply_code(c1) != c2:
        raise CodeError("monomial witness failed re-encoding")
    return witness
