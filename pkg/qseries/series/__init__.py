"""Truncated skew power series, their Laurent localization and automorphisms."""

from .laurent import (
    LaurentElem,
    laurent_add,
    laurent_equiv,
    laurent_inv,
    laurent_mul,
    laurent_neg,
    laurent_pow,
    laurent_scale,
)
from .monomial import Monomial, grlex_key, grlex_less, monomials_below, total_degree, unit_vector
from .normality import in_single_coset, is_normal, normality_certificate
from .skew import (
    SkewSeries,
    conjugate_by_monomial,
    conjugate_by_xi,
    format_series,
    format_terms,
    grlex_leading,
    invert,
    mono_mul,
    mul,
    power,
)
from .torus import TorusElement, apply_torus

__all__ = [
    "LaurentElem",
    "Monomial",
    "SkewSeries",
    "TorusElement",
    "apply_torus",
    "conjugate_by_monomial",
    "conjugate_by_xi",
    "format_series",
    "format_terms",
    "grlex_key",
    "grlex_leading",
    "grlex_less",
    "in_single_coset",
    "invert",
    "is_normal",
    "laurent_add",
    "laurent_equiv",
    "laurent_inv",
    "laurent_mul",
    "laurent_neg",
    "laurent_pow",
    "laurent_scale",
    "mono_mul",
    "monomials_below",
    "mul",
    "normality_certificate",
    "power",
    "total_degree",
    "unit_vector",
]
