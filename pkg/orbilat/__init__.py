"""orbilat: exact lattices, codes over Z_p and extra automorphisms of cyclic lattice orbifolds."""

__version__ = "0.3.0"
