"""Exact integer, rational and cyclotomic linear algebra."""

from .cyclotomic import CycloElem, cyclo_inv, cyclo_mul, zeta
from .matrix import RatMatrix, det, identity, inverse, mat_mul, rref, solve_left, transpose
from .normal_forms import SnfResult, hnf, integer_kernel, snf, xgcd

__all__ = [
    "CycloElem",
    "cyclo_inv",
    "cyclo_mul",
    "zeta",
    "RatMatrix",
    "det",
    "identity",
    "inverse",
    "mat_mul",
    "rref",
    "solve_left",
    "transpose",
    "SnfResult",
    "hnf",
    "integer_kernel",
    "snf",
    "xgcd",
]
