"""Exact polynomial arithmetic over Q and GF(2), Groebner bases, ideal predicates."""

from .fields import GF2, QQ, field_from_name
from .groebner import groebner_basis, normal_form
from .ideal import (
    Ideal,
    UnitIdealError,
    buchberger,
    dimension,
    gf2_specialize,
    height,
    ideal_equal,
    is_nzd,
    min_transversal,
    quotient_by_poly,
)
from .monomial_ideal import MonomialIdeal
from .polynomial import (
    ContextMismatch,
    Monomial,
    Polynomial,
    PolynomialContext,
    PolynomialSyntaxError,
    parse_polynomial,
)

__all__ = [
    "GF2",
    "QQ",
    "ContextMismatch",
    "Ideal",
    "Monomial",
    "MonomialIdeal",
    "Polynomial",
    "PolynomialContext",
    "PolynomialSyntaxError",
    "UnitIdealError",
    "buchberger",
    "dimension",
    "field_from_name",
    "gf2_specialize",
    "groebner_basis",
    "height",
    "ideal_equal",
    "is_nzd",
    "min_transversal",
    "normal_form",
    "parse_polynomial",
    "quotient_by_poly",
]
