"""Exact-arithmetic toolkit for integral quadratic lattices and toric
Landau-Ginzburg models: lattice invariants and duality checks, pencil
intersection lattices, Fano Picard-lattice constructors, Laurent polynomial
combinatorics (Newton polytopes, Minkowski data, mutations, periods), and a
batch verification harness.
"""

__version__ = "0.1.0"
