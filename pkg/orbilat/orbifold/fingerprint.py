"""Comparable invariants of a lattice with an optional isometry."""

from sympy import isprime

from ..config import get_settings
from ..core.budget import Budget
from ..core.errors import QuadraticFormError
from ..lattice.core import Lattice, discriminant_group
from ..lattice.enumeration import is_rootless, theta_prefix
from ..lattice.isometry import LatticeIsometry
from ..records.schemas import LatticeFingerprint
from ..utils.logger import get_logger
from .invariants import dual_image_equals
from .quadratic import discriminant_form, quadratic_type

logger = get_logger(__name__)


def lattice_fingerprint(
    lattice: Lattice,
    g: LatticeIsometry | None = None,
    p: int | None = None,
    theta_norm: int | None = None,
    budget: Budget | None = None,
) -> LatticeFingerprint:
    """
    Rank, determinant, D(L), quadratic type over F_p (when D(L) is
    p-elementary), rootlessness, whether (1-g)L* = L, and the theta series
    up to ``theta_norm``.
    """
    if theta_norm is None:
        theta_norm = get_settings().theta_norm
    if p is None and g is not None:
        p = g.order
    q_type = None
    if p is not None and p != 2 and isprime(p):
        try:
            q_type = quadratic_type(discriminant_form(lattice, p))
        except QuadraticFormError as exc:
            logger.debug(f"no quadratic type for {lattice!r}: {exc}")
    fp = LatticeFingerprint(
        rank=lattice.rank,
        determinant=lattice.determinant,
        discriminant=discriminant_group(lattice).label(),
        quadratic_type=q_type,
        rootless=is_rootless(lattice, budget),
        dual_image_equals=dual_image_equals(lattice, g) if g is not None else None,
        theta=theta_prefix(lattice, theta_norm, budget) if lattice.is_even() else [],
    )
    logger.debug(f"fingerprint of {lattice!r}: {fp.discriminant}, q={fp.quadratic_type}, theta={fp.theta}")
    return fp
