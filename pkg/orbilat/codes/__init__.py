from .zp import CodeZp, MonomialMap, dual_code, is_self_orthogonal, monomial_equivalent, weight_distribution

__all__ = [
    "CodeZp",
    "MonomialMap",
    "dual_code",
    "is_self_orthogonal",
    "monomial_equivalent",
    "weight_distribution",
]
