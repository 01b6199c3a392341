"""Exact algebra: fields, bivariate polynomials, parsing and elimination."""
from planeauto.algebra.field import (
    RATIONALS,
    FieldElement,
    FieldSpec,
    embed_complex,
    field_arith,
    lift,
)
from planeauto.algebra.parser import parse_poly
from planeauto.algebra.plane_poly import (
    PlanePoly,
    format_poly,
    poly_arith,
    poly_compose2,
    poly_eval_complex,
)

__all__ = [
    "RATIONALS",
    "FieldElement",
    "FieldSpec",
    "PlanePoly",
    "embed_complex",
    "field_arith",
    "format_poly",
    "lift",
    "parse_poly",
    "poly_arith",
    "poly_compose2",
    "poly_eval_complex",
]
