"""Secant and tangent spans of rational points on cubic surfaces over finite fields."""

from .census import (
    CensusReport,
    census_f2,
    census_f3_family,
    census_f3_superset,
    lemma_suite,
    verify_main_theorem,
)
from .families import F3FamilyModel
from .gf import GF, FieldError, field_of_order, make_field
from .proj import Line, Plane, Point
from .span import (
    GeneratorReport,
    SpanState,
    generator_report,
    is_generator,
    secant_candidates,
    span_closure,
    tangent_candidates,
)
from .surface import (
    CubicSurface,
    classify_point,
    evaluate,
    gradient,
    is_smooth,
    k_lines_on_surface,
    parse_surface,
    restrict_to_line,
    tangent_plane,
    third_intersection,
)

__all__ = [
    "CensusReport",
    "CubicSurface",
    "F3FamilyModel",
    "FieldError",
    "GF",
    "GeneratorReport",
    "Line",
    "Plane",
    "Point",
    "SpanState",
    "census_f2",
    "census_f3_family",
    "census_f3_superset",
    "classify_point",
    "evaluate",
    "field_of_order",
    "generator_report",
    "gradient",
    "is_generator",
    "is_smooth",
    "k_lines_on_surface",
    "lemma_suite",
    "make_field",
    "parse_surface",
    "restrict_to_line",
    "secant_candidates",
    "span_closure",
    "tangent_candidates",
    "tangent_plane",
    "third_intersection",
    "verify_main_theorem",
]
