"""Backend module for the Bratteli toolkit.

Contains the computational core: graded graphs and their families,
pascalization, exact path counting and the M(n, l) recursion, central
measures and the finite-level K0 quotient. Nothing here prints; results are
returned as values and reports for the view layer to render.
"""

__all__ = []
