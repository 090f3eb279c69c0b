"""Exact multibasic Ehrhart theory for lattice polytopes.

Integer-point transforms of cones and polytopes as rational functions with
binomial denominators, the multibasic Ehrhart series and delta-vector, and
the multibasic Ehrhart polynomial ``L_P`` with ``L_P([n]_q) = sigma_{nP}(q)``.
A brute-force lattice-point oracle checks every result.
"""
from .errors import (
    ArityMismatch,
    DependentGenerators,
    DimensionMismatch,
    EhrhartError,
    EmptyInput,
    NegativeOrthantViolation,
    NonGenericLinearForm,
    NotAVertex,
    NotPointed,
    VanishingDenominatorFactor,
    ZeroHeightDenominatorFactor,
)
from .laurent import (
    FactoredRationalFunction,
    LaurentPolynomial,
    lp_add,
    lp_invert_variables,
    lp_mul,
    lp_substitute_monomial,
    rf_add,
    rf_equal,
    rf_mul,
    rf_neg,
    rf_specialize_ones,
    rf_sum,
)
from .geometry import (
    Cone,
    Polytope,
    SimplicialCone,
    Triangulation,
    cone_over,
    convex_hull_vertices,
    half_open_decompose,
    lattice_index,
    parallelepiped_points,
    shifted_vertex_cone,
    triangulate_pointed,
    validate_polytope,
    vertex_cone,
)
from .transforms import (
    brion_sum,
    sigma_pointed,
    sigma_polytope,
    sigma_simplicial,
    stanley_reciprocity_check,
    vertex_cone_transforms,
)
from .ehrhart import (
    MultibasicDeltaVector,
    MultibasicEhrhartPolynomial,
    MultibasicEhrhartSeries,
    QInteger,
    bilateral_cancellation_check,
    delta_vector,
    ehrhart_polynomial,
    evaluate_at_q_integers,
    interior_series,
    reciprocity_check,
    series,
    specialize_classical,
    specialize_q_ehrhart,
    translate_polynomial_check,
    translate_series_check,
    vertex_cone_sum_check,
)
from .oracle import (
    FacetSystem,
    count_dilate,
    enumerate_dilate,
    expand_truncated,
    facet_system,
    sigma_brute,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "DependentGenerators",
    "DimensionMismatch",
    "EhrhartError",
    "EmptyInput",
    "NegativeOrthantViolation",
    "NonGenericLinearForm",
    "NotAVertex",
    "NotPointed",
    "VanishingDenominatorFactor",
    "ZeroHeightDenominatorFactor",
    "FactoredRationalFunction",
    "LaurentPolynomial",
    "lp_add",
    "lp_invert_variables",
    "lp_mul",
    "lp_substitute_monomial",
    "rf_add",
    "rf_equal",
    "rf_mul",
    "rf_neg",
    "rf_specialize_ones",
    "rf_sum",
    "Cone",
    "Polytope",
    "SimplicialCone",
    "Triangulation",
    "cone_over",
    "convex_hull_vertices",
    "half_open_decompose",
    "lattice_index",
    "parallelepiped_points",
    "shifted_vertex_cone",
    "triangulate_pointed",
    "validate_polytope",
    "vertex_cone",
    "brion_sum",
    "sigma_pointed",
    "sigma_polytope",
    "sigma_simplicial",
    "stanley_reciprocity_check",
    "vertex_cone_transforms",
    "MultibasicDeltaVector",
    "MultibasicEhrhartPolynomial",
    "MultibasicEhrhartSeries",
    "QInteger",
    "bilateral_cancellation_check",
    "delta_vector",
    "ehrhart_polynomial",
    "evaluate_at_q_integers",
    "interior_series",
    "reciprocity_check",
    "series",
    "specialize_classical",
    "specialize_q_ehrhart",
    "translate_polynomial_check",
    "translate_series_check",
    "vertex_cone_sum_check",
    "FacetSystem",
    "count_dilate",
    "enumerate_dilate",
    "expand_truncated",
    "facet_system",
    "sigma_brute",
]
