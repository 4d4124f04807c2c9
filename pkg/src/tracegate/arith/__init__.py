"""Exact arithmetic foundation: integers, polynomials, matrices, F_p."""

from .integers import factorint, int_gcd_bezout, is_probable_prime
from .matrix import det, hnf, inverse
from .modp import factor_mod_p
from .poly import discriminant as poly_discriminant
from .poly import resultant

__all__ = [
    "det",
    "factor_mod_p",
    "factorint",
    "hnf",
    "int_gcd_bezout",
    "inverse",
    "is_probable_prime",
    "poly_discriminant",
    "resultant",
]
