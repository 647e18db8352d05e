"""Exact arithmetic: rationals, Laurent and multivariate polynomials, series."""

from fractions import Fraction as Rational

from .base import LAURENT, QQ, ZZ, NotInvertibleError, Ring, multi_ring
from .laurent import LaurentPoly
from .linalg import bareiss_det, leading_minors
from .multi import MultiPoly
from .poly import MINUS_INFINITY, RingPoly, RingSeries, series_exp, series_inverse, series_log
from .render import (
    PolyParseError,
    bivariate_from_json,
    bivariate_to_json,
    format_terms,
    multipoly_to_json,
    parse_bivariate,
    render_poly,
)

__all__ = [
    "LAURENT",
    "MINUS_INFINITY",
    "QQ",
    "ZZ",
    "LaurentPoly",
    "MultiPoly",
    "NotInvertibleError",
    "PolyParseError",
    "Rational",
    "Ring",
    "RingPoly",
    "RingSeries",
    "bareiss_det",
    "bivariate_from_json",
    "bivariate_to_json",
    "format_terms",
    "leading_minors",
    "multi_ring",
    "multipoly_to_json",
    "parse_bivariate",
    "render_poly",
    "series_exp",
    "series_inverse",
    "series_log",
]
