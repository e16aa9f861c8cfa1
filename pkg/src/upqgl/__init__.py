"""Exact verification of graded R-matrices and the U_{p,q}(gl(m|n)^) relation machinery."""

from .field import ONE, ZERO, LaurentPoly, Monomial, RatFunc, eq, gcd_reduce, substitute, var
from .text import ParseError, parse_expr, parse_matrix

__all__ = ["ONE", "ZERO", "LaurentPoly", "Monomial", "RatFunc", "eq", "gcd_reduce",
           "substitute", "var", "ParseError", "parse_expr", "parse_matrix"]
