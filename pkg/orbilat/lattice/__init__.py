from .core import (
    Coset,
    DiscriminantGroup,
    Lattice,
    direct_sum,
    discriminant_group,
    dual,
    glue,
    index,
    intersect,
    orthogonal_complement,
    span,
    zero_lattice,
)
from .enumeration import enumerate_up_to_norm, is_rootless, theta_prefix

__all__ = [
    "Coset",
    "DiscriminantGroup",
    "Lattice",
    "direct_sum",
    "discriminant_group",
    "dual",
    "glue",
    "index",
    "intersect",
    "orthogonal_complement",
    "span",
    "zero_lattice",
    "enumerate_up_to_norm",
    "is_rootless",
    "theta_prefix",
]
