"""
Constructions A and B over orthogonal sums of A_{k_i - 1}.

The general mixed-order setting is modelled by ``ConstructionContext`` with
one order k_i per component; the Z_p case is the context with all k_i = p.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import Dict, FrozenSet, List, Sequence, Tuple

from ..core.errors import InputError, NotFixedPointFree
from ..exact.matrix import Vector, frac
from ..lattice.core import Lattice, direct_sum, dual, index, integral_against, span
from ..lattice.enumeration import iter_coset_vectors
from ..lattice.isometry import LatticeIsometry, block_diagonal, cyclic_shift_matrix
from ..lattice.roots import simple_roots, type_a, weight_or_zero, weyl_vector
from ..utils.logger import get_logger
from .zp import CodeZp, dual_code, hamming_weight, is_self_orthogonal

logger = get_logger(__name__)

Subgroup = CodeZp | Sequence[Sequence[int]]


@dataclass(frozen=True)
class ConstructionContext:
    """Component orders k_1..k_t of R = A_{k_1-1} ⊥ ... ⊥ A_{k_t-1} with the standard base."""

    orders: Tuple[int, ...]

    @classmethod
    def zp(cls, p: int, t: int) -> "ConstructionContext":
        return cls(tuple([p] * t))

    def __post_init__(self) -> None:
        if not self.orders or any(k < 2 for k in self.orders):
            raise InputError(f"component orders must be >= 2, got {self.orders}")

    @property
    def t(self) -> int:
        return len(self.orders)

    @property
    def ambient_dim(self) -> int:
        return sum(self.orders)

    @property
    def n(self) -> int:
        """lcm of the component orders."""
        return lcm(*self.orders)

    @property
    def p(self) -> int:
        if len(set(self.orders)) != 1:
            raise InputError("context has mixed component orders")
        return self.orders[0]

    @cached_property
    def offsets(self) -> Tuple[int, ...]:
        out, acc = [], 0
        for k in self.orders:
            out.append(acc)
            acc += k
        return tuple(out)

    def embed(self, block: int, vec: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * self.ambient_dim
        start = self.offsets[block]
        for i, v in enumerate(vec):
            out[start + i] = frac(v)
        return tuple(out)

    def block(self, v: Sequence[Fraction], i: int) -> Vector:
        start = self.offsets[i]
        return tuple(v[start : start + self.orders[i]])

    @cached_property
    def root_lattice(self) -> Lattice:
        return direct_sum(*(type_a(k).lattice for k in self.orders)).named("R")

    @cached_property
    def base(self) -> Tuple[Vector, ...]:
        """Delta = union of the standard bases Delta_i, block by block."""
        return tuple(self.embed(i, a) for i, k in enumerate(self.orders) for a in simple_roots(k))

    @cached_property
    def chi(self) -> Vector:
        """chi_Delta = (rho_1/k_1, ..., rho_t/k_t)."""
        parts: List[Fraction] = []
        for k in self.orders:
            parts.extend(r / k for r in weyl_vector(k))
        return tuple(parts)

    def check_word(self, x: Sequence[int]) -> Tuple[int, ...]:
        if len(x) != self.t:
            raise InputError(f"word length {len(x)} differs from t = {self.t}")
        return tuple(int(v) % k for v, k in zip(x, self.orders))


@dataclass(frozen=True)
class GlueVector:
    x: Tuple[int, ...]
    vector: Vector

    @property
    def norm(self) -> Fraction:
        return sum((v * v for v in self.vector), Fraction(0))


def lambda_x(ctx: ConstructionContext, x: Sequence[int]) -> Vector:
    """(lambda^1_{x_1}, ..., lambda^t_{x_t}) with lambda_0 = 0."""
    word = ctx.check_word(x)
    parts: List[Fraction] = []
    for xi, k in zip(word, ctx.orders):
        parts.extend(weight_or_zero(k, xi))
    return tuple(parts)


def glue_vector(ctx: ConstructionContext, x: Sequence[int]) -> GlueVector:
    word = ctx.check_word(x)
    return GlueVector(word, lambda_x(ctx, word))


def expected_glue_norm(ctx: ConstructionContext, x: Sequence[int]) -> Fraction:
    word = ctx.check_word(x)
    return sum((Fraction(xi * (k - xi), k) for xi, k in zip(word, ctx.orders)), Fraction(0))


def _generators(ctx: ConstructionContext, code: Subgroup) -> List[Tuple[int, ...]]:
    if isinstance(code, CodeZp):
        if code.length != ctx.t or any(k != code.p for k in ctx.orders):
            raise InputError(f"code over Z_{code.p} of length {code.length} does not fit orders {ctx.orders}")
        return [tuple(r) for r in code.gen]
    return [ctx.check_word(r) for r in code]


def construct_A(ctx: ConstructionContext, code: Subgroup) -> Lattice:
    """L_A(C) = Z-span of R and lambda_c over generators c of C."""
    gens = list(ctx.root_lattice.basis) + [lambda_x(ctx, c) for c in _generators(ctx, code)]
    return span(gens, ctx.ambient_dim, name="L_A")


def construct_B(ctx: ConstructionContext, code: Subgroup) -> Lattice:
    """L_B(C) = {alpha in L_A(C) : (alpha|chi) in Z}."""
    return integral_against(construct_A(ctx, code), ctx.chi).named("L_B")


def delta_e_matrix(ctx: ConstructionContext, e: Sequence[int]) -> List[List[int]]:
    word = ctx.check_word(e)
    return block_diagonal([cyclic_shift_matrix(k, ei) for k, ei in zip(ctx.orders, word)])


def g_delta_e(
    ctx: ConstructionContext,
    e: Sequence[int],
    lattice: Lattice | None = None,
    require_fpf: bool = True,
) -> LatticeIsometry:
    """
    g_{Delta,e} = (g_{Delta_1}^{e_1}, ..., g_{Delta_t}^{e_t}) on the given lattice
    (the root lattice R by default).
    """
    word = ctx.check_word(e)
    if require_fpf:
        bad = [i for i, (ei, k) in enumerate(zip(word, ctx.orders)) if gcd(ei, k) != 1]
        if bad:
            raise NotFixedPointFree(
                f"not fixed-point free: e_i is not a unit mod k_i at coordinates {bad}"
            )
    target = lattice if lattice is not None else ctx.root_lattice
    return LatticeIsometry.from_ambient(target, delta_e_matrix(ctx, word))


def extra_preconditions_report(ctx: ConstructionContext, code: Subgroup, e: Sequence[int]) -> Dict[str, bool]:
    """Individual assumptions for extra automorphisms of the (L_B(C), g_{Delta,e}) orbifold."""
    word = ctx.check_word(e)
    la = construct_A(ctx, code)
    lb = construct_B(ctx, code)
    la_dual = dual(la)
    n = ctx.n
    report = {
        "index_is_n": index(lb, la) == n,
        "chi_in_dual_over_n": tuple(n * c for c in ctx.chi) in la_dual,
        "lambda_e_in_dual": lambda_x(ctx, word) in la_dual,
        "fixed_point_free": all(gcd(ei, k) == 1 for ei, k in zip(word, ctx.orders)),
    }
    if isinstance(code, CodeZp):
        report["self_orthogonal"] = is_self_orthogonal(code)
        report["e_in_dual_code"] = dual_code(code).contains(word)
        report["e_full_weight"] = hamming_weight(word) == ctx.t
    return report


def verify_extra_preconditions(ctx: ConstructionContext, code: Subgroup, e: Sequence[int]) -> bool:
    report = extra_preconditions_report(ctx, code, e)
    logger.debug(f"extra-automorphism preconditions: {report}")
    return all(report.values())


@lru_cache(maxsize=None)
def coset_root_options(p: int, x: int) -> FrozenSet[Tuple[Fraction, int]]:
    """{(norm, (v|rho) mod p)} over v in lambda_x + A_{p-1} with norm <= 2."""
    lat = type_a(p).lattice
    rep = weight_or_zero(p, x)
    rho = weyl_vector(p)
    options = set()
    for coords, nrm in iter_coset_vectors(lat, 2, rep):
        v = tuple(a + b for a, b in zip(lat.vector(coords), rep))
        pairing = sum((a * b for a, b in zip(v, rho)), Fraction(0))
        options.add((nrm, int(pairing) % p))
    return frozenset(options)


@lru_cache(maxsize=None)
def _residues_create_root(p: int, residues: Tuple[int, ...]) -> bool:
    states = {(Fraction(0), 0)}
    for x in residues:
        nxt = set()
        for nrm, pr in states:
            for dn, dp in coset_root_options(p, x):
                total = nrm + dn
                if total <= 2:
                    nxt.add((total, (pr + dp) % p))
        states = nxt
    return (Fraction(2), 0) in states


def codeword_creates_root(p: int, word: Sequence[int]) -> bool:
    """
    True iff lambda_c + R holds a norm-2 vector alpha with (alpha|chi) in Z.

    Components with c_i = 0 only add the zero vector or a root of A_{p-1};
    the table of coset options covers both.
    """
    if p % 2 == 0:
        raise InputError("root test by codewords needs p odd")
    return _residues_create_root(p, tuple(sorted(int(x) % p for x in word)))


def b_roots_by_codewords(code: CodeZp) -> bool:
    """True when some codeword of C yields a root of L_B(C)."""
    return any(codeword_creates_root(code.p, w) for w in code.codewords())
