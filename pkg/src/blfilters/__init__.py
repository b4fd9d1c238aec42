"""Finite BL-algebras, crisp and fuzzy filters, and exhaustive theorem checks."""

from .algebra import (
    ARITHMETIC_LAWS,
    AxiomReport,
    FiniteBLAlgebra,
    PropertyReport,
    canonical_form,
    check_arithmetic_properties,
    format_algebra,
    is_isomorphic,
    leq,
    neg,
    parse_algebra,
    validate_bl,
)
from .errors import AlgebraError, InconsistencyError, ParseError
from .filters import (
    KINDS,
    FilterKind,
    check_filter_theorems,
    enumerate_filters,
    filter_via_characterization,
    is_filter,
    render_subset,
)
from .fuzzy import (
    FuzzyPoint,
    FuzzySet,
    PointRelation,
    critical_values,
    format_fuzzy_set,
    level_set,
    parse_fuzzy_set,
    point_relation,
    render_rational,
    unit_rational,
)
from .taxonomy import (
    EQ_VQ,
    NAMED_VARIANTS,
    ORDINARY,
    OVERLINE,
    IntervalSet,
    TaxonomyRecord,
    Variant,
    classify,
    level_form_check,
    point_form_check,
    threshold_check,
    threshold_profile,
    thresholds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
