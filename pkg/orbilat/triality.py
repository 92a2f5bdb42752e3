"""
Exact checks of the F, G, Z matrix identities behind the extra automorphism
of the A_{k-1} orbifold, over Q(zeta_k).

Z carries a factor 1/sqrt(k) that is never formed: we store Z0 = sqrt(k)·Z
with entries omega^{ab} (a, b = 1..k) and its exact inverse (1/k)·omega^{-ab}.
Conjugation by Z equals conjugation by Z0, and statements about powers of Z
are checked on Z0 with the matching power of k.

Inner automorphisms are stored as pairs (left, right) acting by
X -> left·X·right.  Relations such as zeta^{-1} g zeta = phi read with
automorphisms acting on the right: the composite applies zeta^{-1} first.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence

from .core.errors import InputError, InvariantViolation
from .exact.cyclotomic import (
    CycloElem,
    CycloMatrixRows,
    cmat_equal,
    cmat_identity,
    cmat_mul,
    cmat_pow,
    cmat_scale,
    zeta,
)
from .lattice.roots import coxeter_isometry, root_system, weyl_vector
from .utils.logger import get_logger

logger = get_logger(__name__)


def _check_k(k: int) -> None:
    if k < 2:
        raise InputError(f"k must be at least 2, got {k}")


def _zero(k: int) -> CycloMatrixRows:
    return [[CycloElem.zero(k) for _ in range(k)] for _ in range(k)]


def matrix_unit(k: int, i: int, j: int) -> CycloMatrixRows:
    m = _zero(k)
    m[i][j] = CycloElem.one(k)
    return m


def traceless_basis(k: int) -> List[CycloMatrixRows]:
    """E_ij for i != j, then E_ii - E_{i+1,i+1}."""
    basis = [matrix_unit(k, i, j) for i in range(k) for j in range(k) if i != j]
    for i in range(k - 1):
        h = matrix_unit(k, i, i)
        h[i + 1][i + 1] = -CycloElem.one(k)
        basis.append(h)
    return basis


def _transpose(m: Sequence[Sequence[CycloElem]]) -> CycloMatrixRows:
    return [list(r) for r in zip(*m)]


def _is_scalar(m: Sequence[Sequence[CycloElem]]) -> bool:
    n = len(m)
    return all(m[i][j].is_zero() for i in range(n) for j in range(n) if i != j) and all(
        m[i][i] == m[0][0] for i in range(n)
    )


@dataclass(frozen=True)
class TrialityMatrices:
    k: int
    F: CycloMatrixRows
    F_inv: CycloMatrixRows
    G: CycloMatrixRows
    G_inv: CycloMatrixRows
    Z0: CycloMatrixRows
    Z0_inv: CycloMatrixRows

    def __iter__(self):
        return iter((self.F, self.G, self.Z0))


def build_FGZ(k: int) -> TrialityMatrices:
    """F = diag(omega, ..., omega^{k-1}, 1), G the cyclic shift, Z0 = (omega^{ab})."""
    _check_k(k)
    f = _zero(k)
    f_inv = _zero(k)
    g = _zero(k)
    for a in range(k):
        f[a][a] = zeta(k, a + 1)
        f_inv[a][a] = zeta(k, -(a + 1))
        g[a][(a + 1) % k] = CycloElem.one(k)
    z0 = [[zeta(k, (a + 1) * (b + 1)) for b in range(k)] for a in range(k)]
    z0_inv = [[zeta(k, -(a + 1) * (b + 1)) / k for b in range(k)] for a in range(k)]
    if not cmat_equal(cmat_mul(z0, z0_inv), cmat_identity(k, k)):
        raise InvariantViolation(f"Z0 inverse is wrong for k={k}")
    return TrialityMatrices(k, f, f_inv, g, _transpose(g), z0, z0_inv)


@dataclass(frozen=True)
class Conjugation:
    """X -> left·X·right."""

    left: CycloMatrixRows
    right: CycloMatrixRows

    @classmethod
    def by(cls, m: CycloMatrixRows, m_inv: CycloMatrixRows) -> "Conjugation":
        """X -> m^{-1}·X·m."""
        return cls(m_inv, m)

    def __call__(self, x: CycloMatrixRows) -> CycloMatrixRows:
        return cmat_mul(cmat_mul(self.left, x), self.right)

    def then(self, other: "Conjugation") -> "Conjugation":
        """Apply self, then other."""
        return Conjugation(cmat_mul(other.left, self.left), cmat_mul(self.right, other.right))


def _operators(mats: TrialityMatrices) -> Dict[str, Conjugation]:
    return {
        "phi": Conjugation.by(mats.F, mats.F_inv),
        "phi_inv": Conjugation.by(mats.F_inv, mats.F),
        "g": Conjugation.by(mats.G, mats.G_inv),
        "g_inv": Conjugation.by(mats.G_inv, mats.G),
        "zeta": Conjugation.by(mats.Z0, mats.Z0_inv),
        "zeta_inv": Conjugation.by(mats.Z0_inv, mats.Z0),
    }


def _agree_on_basis(k: int, a: Callable, b: Callable) -> bool:
    return all(cmat_equal(a(x), b(x)) for x in traceless_basis(k))


def conjugation_order(m: CycloMatrixRows, cap: int) -> int | None:
    """Order of X -> m^{-1} X m on traceless matrices: least j with m^j scalar."""
    power = [list(r) for r in m]
    for j in range(1, cap + 1):
        if _is_scalar(power):
            return j
        power = cmat_mul(power, m)
    return None


def _reflection(k: int) -> CycloMatrixRows:
    """Permutation matrix with 1 at (a, b) when a + b = 0 mod k (1-based)."""
    p = _zero(k)
    for a in range(1, k + 1):
        b = (-a) % k or k
        p[a - 1][b - 1] = CycloElem.one(k)
    return p


def sfg_report(k: int) -> Dict[str, bool]:
    mats = build_FGZ(k)
    F, G, Z0, Z0_inv = mats.F, mats.G, mats.Z0, mats.Z0_inv
    ident = cmat_identity(k, k)
    omega_inv = zeta(k, -1)
    z0_sq = cmat_mul(Z0, Z0)
    z0_sq_inv = cmat_mul(Z0_inv, Z0_inv)
    report = {
        "F^k = I": cmat_equal(cmat_pow(F, k), ident),
        "G^k = I": cmat_equal(cmat_pow(G, k), ident),
        "Z^-1 G Z = F": cmat_equal(cmat_mul(cmat_mul(Z0_inv, G), Z0), F),
        "G^-1 F G = omega^-1 F": cmat_equal(cmat_mul(cmat_mul(mats.G_inv, F), G), cmat_scale(omega_inv, F)),
        "Z^-2 G Z^2 = G^-1": cmat_equal(cmat_mul(cmat_mul(z0_sq_inv, G), z0_sq), mats.G_inv),
        "Z^2 = reflection": cmat_equal(z0_sq, cmat_scale(k, _reflection(k))),
    }
    if k == 2:
        report["Z^2 = I"] = cmat_equal(z0_sq, cmat_scale(2, ident))
    else:
        report["Z^4 = I"] = cmat_equal(cmat_mul(z0_sq, z0_sq), cmat_scale(k * k, ident))
    return report


def verify_sfg(k: int) -> bool:
    """Z^-1 G Z = F, G^-1 F G = omega^-1 F and Z^-2 G Z^2 = G^-1, with the powers of Z."""
    report = sfg_report(k)
    failed = [name for name, ok in report.items() if not ok]
    if failed:
        logger.warning(f"k={k}: failed {failed}")
    return not failed


def conjugation_report(k: int) -> Dict[str, bool]:
    mats = build_FGZ(k)
    op = _operators(mats)
    zeta_op = op["zeta"]
    return {
        "zeta(G) = F": cmat_equal(zeta_op(mats.G), mats.F),
        "zeta(F) = G^-1": cmat_equal(zeta_op(mats.F), mats.G_inv),
        "zeta^-1 g zeta = phi": _agree_on_basis(k, op["zeta_inv"].then(op["g"]).then(zeta_op), op["phi"]),
        "zeta^-1 phi zeta = g^-1": _agree_on_basis(k, op["zeta_inv"].then(op["phi"]).then(zeta_op), op["g_inv"]),
        "phi g = g phi": _agree_on_basis(k, op["phi"].then(op["g"]), op["g"].then(op["phi"])),
        "order(phi) = k": conjugation_order(mats.F, k) == k,
        "order(g) = k": conjugation_order(mats.G, k) == k,
    }


def verify_conjugation_relations(k: int) -> bool:
    report = conjugation_report(k)
    failed = [name for name, ok in report.items() if not ok]
    if failed:
        logger.warning(f"k={k}: failed {failed}")
    return not failed


def verify_weight_grading(k: int) -> bool:
    """
    F^-1 E_ij F = omega^{j-i} E_ij off the diagonal, F^-1 H F = H on the
    diagonal, and j - i = (rho | v_i - v_j) for the Weyl vector rho.
    """
    mats = build_FGZ(k)
    phi = _operators(mats)["phi"]
    rho = weyl_vector(k)
    for i in range(k):
        for j in range(k):
            e = matrix_unit(k, i, j)
            image = phi(e)
            if i == j:
                continue
            if not cmat_equal(image, cmat_scale(zeta(k, j - i), e)):
                logger.warning(f"k={k}: F^-1 E_{i + 1}{j + 1} F has the wrong eigenvalue")
                return False
            if rho[i] - rho[j] != j - i:
                return False
    for h in traceless_basis(k)[k * (k - 1):]:
        if not cmat_equal(phi(h), h):
            return False
    return True


def verify_root_space_permutation(k: int) -> bool:
    """
    g = conjugation by G sends the root space of v_i - v_j to that of
    g_Delta(v_i - v_j) = v_{i+1} - v_{j+1}, g_Delta being the Coxeter isometry.
    """
    mats = build_FGZ(k)
    g_op = _operators(mats)["g"]
    cox = coxeter_isometry(k)
    for root in root_system(k):
        i = root.index(1)
        j = root.index(-1)
        image = cox.apply(root)
        target_i, target_j = image.index(1), image.index(-1)
        if not cmat_equal(g_op(matrix_unit(k, i, j)), matrix_unit(k, target_i, target_j)):
            logger.warning(f"k={k}: root space of {root} goes elsewhere")
            return False
    return True
