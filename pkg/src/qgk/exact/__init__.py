"""Exact arithmetic kernel."""

from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi
from .poly import LaurentPoly, poly_gcd, q_int
from .ratfunc import RatFunc
from .linalg import (NonSquare, ZeroInput, determinant, matmul, rank,
                     smith_normal_form, transpose, vanishing_order)

__all__ = [
    "Cyclotomic", "cyclotomic_polynomial", "euler_phi", "LaurentPoly", "poly_gcd",
    "q_int", "RatFunc", "NonSquare", "ZeroInput", "determinant", "matmul", "rank",
    "smith_normal_form", "transpose", "vanishing_order",
]
