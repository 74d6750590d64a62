from .encoding import format_scalar, parse_scalar, poly_from_json, poly_to_json
from .parser import format_polynomial, parse_polynomial
from .poly import BivariatePoly, Poly, UniPoly
from .resultant import discriminant_y, resultant_y
from .roots import Root, cluster_roots, roots_univariate
from .scalar import DEFAULT_CTX, NumCtx, to_complex
from .series import LaurentSeries

__all__ = [
    "BivariatePoly", "DEFAULT_CTX", "LaurentSeries", "NumCtx", "Poly", "Root", "UniPoly",
    "cluster_roots", "discriminant_y", "format_polynomial", "format_scalar",
    "parse_polynomial", "parse_scalar", "poly_from_json", "poly_to_json",
    "resultant_y", "roots_univariate", "to_complex",
]
