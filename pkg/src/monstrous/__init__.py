"""Exact-arithmetic toolkit: binary codes, rank-24 even unimodular
lattices, rational q-series, a desk-scale Heisenberg vertex-algebra
kernel, the binary octahedral group, and the assembly and replicability
checks for the q^-1 + 196884q + ... modular function."""

__version__ = "0.1.0"
