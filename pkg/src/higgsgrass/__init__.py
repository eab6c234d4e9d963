"""Exact computations with Higgs Grassmannians, spectral covers and related schemes."""

from .polyring import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Poly,
    PolyError,
    UnknownVariable,
    VarSetMismatch,
    char_poly,
    determinant,
    differentiate,
    elimination_order,
    evaluate,
    format_poly,
    gcd_multivariate,
    poly_arith,
    poly_square_root,
    varset,
)
from .parsing import BadExponent, ParseError, parse_poly

__version__ = "0.1.0"
