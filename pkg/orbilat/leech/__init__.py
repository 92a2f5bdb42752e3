"""Golay code, Leech lattice and the coinvariant lattices of its permutation isometries."""

from .coinvariant import CLASS_DATA, CoinvariantClass, coinvariant_class, reconstruct_unimodular, reference_fingerprint
from .golay import GolayCode, build_golay
from .leech import build_leech
from .permutations import CYCLE_TYPES, PermutationIsometry, find_golay_automorphism

__all__ = [
    "CLASS_DATA",
    "CoinvariantClass",
    "coinvariant_class",
    "reconstruct_unimodular",
    "reference_fingerprint",
    "GolayCode",
    "build_golay",
    "build_leech",
    "CYCLE_TYPES",
    "PermutationIsometry",
    "find_golay_automorphism",
]
