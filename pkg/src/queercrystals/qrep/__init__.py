"""Exact realization of the quantum queer superalgebra on tensor powers
of its vector representation, with q -> 0 residue checks against the
combinatorial crystals."""
