"""Exact (q,y)-Laguerre polynomials, their moments and combinatorial models."""
from .laguerre import LagPoly, coeff_l, laguerre_explicit, laguerre_rec, laguerre_signless
from .moments import MomentTable, laguerre_moments, linearization_formula
from .mpoly import MPoly, TruncationPolicy

__all__ = [
    "LagPoly", "MPoly", "MomentTable", "TruncationPolicy", "coeff_l", "laguerre_explicit",
    "laguerre_moments", "laguerre_rec", "laguerre_signless", "linearization_formula",
]
