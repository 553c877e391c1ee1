"""Exact mod-p cohomology toolkit for the exceptional Lie groups.

Reconstructs, over F_2, F_3 and F_5, the structure constants of the
Steenrod action on the generalized Weyl invariants of G_2, F_4, E_6,
E_7, E_8, and builds the finite Hopf models of H*(G;F_p) with their
Bockstein, reduced-power and coproduct tables.
"""

__version__ = "0.1.0"
