"""Torus-invariant standard monomial workbench for even orthogonal Grassmannians.

Subpackages cover the signed-permutation Weyl combinatorics, tableau
enumeration, exact Pfaffian algebra, quadratic straightening, graded invariant
ring analysis, and commutative rewriting systems with diamond-lemma
certification.  The ``smtorus`` console script exposes batch presets.
"""

__version__ = "0.1.0"
