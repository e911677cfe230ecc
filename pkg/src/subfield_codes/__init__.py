"""Subfield codes of two families of linear codes over GF(p^m)."""

from .code import (
    BudgetExceeded,
    DualReport,
    GeneratorMatrix,
    WeightDistribution,
    classify,
    dual_report,
    low_weight_dual_count,
    min_distance,
    pless_dual_a123,
    rank,
    sphere_packing,
    subfield_expand,
    trace_code_enumerate,
    weight_distribution,
)
from .constructions import (
    ClaimSet,
    build_c1,
    build_c2,
    closed_form_wd_c1,
    closed_form_wd_c2,
    expected_claims,
)
from .field import FieldElement, FiniteField, make_field, norm, quadratic_character, squares, trace

__version__ = "0.1.0"
