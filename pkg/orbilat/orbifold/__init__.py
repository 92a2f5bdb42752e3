from .decide import decide_extra
from .extract import Extraction, chab_extract
from .fingerprint import lattice_fingerprint
from .invariants import (
    OrbifoldParams,
    case2_parameter_table,
    conformal_weight_data,
    dim_T_squared,
    epsilon,
    orbifold_weight_one_dim,
    qdim_squared,
)
from .quadratic import QuadraticSpaceFp, discriminant_form, quadratic_type, singular_vectors

__all__ = [
    "decide_extra",
    "Extraction",
    "chab_extract",
    "lattice_fingerprint",
    "OrbifoldParams",
    "case2_parameter_table",
    "conformal_weight_data",
    "dim_T_squared",
    "epsilon",
    "orbifold_weight_one_dim",
    "qdim_squared",
    "QuadraticSpaceFp",
    "discriminant_form",
    "quadratic_type",
    "singular_vectors",
]
