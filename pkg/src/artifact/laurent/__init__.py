"""Exact Laurent-polynomial toolkit: parametrized coefficients, Newton
polytopes, Minkowski decompositions of facets, mutations, and periods."""

from .params import ParamPoly
from .poly import Laurent, specialize
from .parser import LaurentSyntaxError, format_laurent, parse_laurent
from .polytopes import (
    Face,
    LatticePolytope,
    ccw_vertices,
    chart_lift,
    chart_project,
    face_chart,
    minkowski_sum_points,
    polygon_edges,
    saturated_row_basis,
)
from .newton import dual_and_reflexive, face_polynomial, newton_polytope
from .minkowski import (
    is_minkowski_polynomial,
    minkowski_decompositions,
    product_matches,
    refines,
    square_binomial_factors,
    verify_M_polynomial,
)
from .mutation import monomial_transform, mutate, mutate_triple
from .period import main_period
from .constructors import dp_model, lg_constructor, product_model, quadric_model

__all__ = [
    "Face",
    "LatticePolytope",
    "Laurent",
    "LaurentSyntaxError",
    "ParamPoly",
    "ccw_vertices",
    "chart_lift",
    "chart_project",
    "dp_model",
    "dual_and_reflexive",
    "face_chart",
    "face_polynomial",
    "format_laurent",
    "is_minkowski_polynomial",
    "lg_constructor",
    "main_period",
    "minkowski_decompositions",
    "minkowski_sum_points",
    "monomial_transform",
    "mutate",
    "mutate_triple",
    "newton_polytope",
    "parse_laurent",
    "polygon_edges",
    "product_matches",
    "product_model",
    "quadric_model",
    "refines",
    "saturated_row_basis",
    "specialize",
    "square_binomial_factors",
    "verify_M_polynomial",
]
