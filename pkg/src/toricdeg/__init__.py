"""Exact toric degeneration toolkit: lattice polytopes, sliding valuations,
Gromov-width lower bounds by simplex fitting, and Bott manifold rigidity."""

from .bott import (
    BottData,
    CohClass,
    CohRing,
    RingMap,
    bott_polytope,
    decide_symplectomorphic,
    elementary_move,
    exceptional_type,
    hirzebruch_classify,
    is_hypercube,
    is_q_trivial,
    primitive_square_zero,
    ring_map_check,
    special_elements,
    standard_form,
    verify_degeneration_move,
)
from .geometry import (
    HalfSpace,
    HPolytope,
    LatticePointSet,
    VPolytope,
    dilate,
    hull,
    is_delzant_smooth,
    is_normal,
    lattice_points,
    minkowski_sum,
    normalize_at_vertex,
    vertices,
)
from .gromov import (
    RootSystemSpec,
    SimplexFit,
    best_simplex_lb,
    coroots,
    fits,
    gw_formula,
    simplex,
)
from .valuation import (
    GradedSemigroup,
    SlideDirection,
    UPolynomial,
    build_semigroup,
    check_cone_condition,
    check_saturation,
    expand_monomial,
    lowest_term,
    okounkov_approx,
    slide,
    valuation_image,
)

__all__ = [
    "BottData",
    "CohClass",
    "CohRing",
    "GradedSemigroup",
    "HPolytope",
    "HalfSpace",
    "LatticePointSet",
    "RingMap",
    "RootSystemSpec",
    "SimplexFit",
    "SlideDirection",
    "UPolynomial",
    "VPolytope",
    "best_simplex_lb",
    "bott_polytope",
    "build_semigroup",
    "check_cone_condition",
    "check_saturation",
    "coroots",
    "decide_symplectomorphic",
    "dilate",
    "elementary_move",
    "exceptional_type",
    "expand_monomial",
    "fits",
    "gw_formula",
    "hirzebruch_classify",
    "hull",
    "is_delzant_smooth",
    "is_hypercube",
    "is_normal",
    "is_q_trivial",
    "lattice_points",
    "lowest_term",
    "minkowski_sum",
    "normalize_at_vertex",
    "okounkov_approx",
    "primitive_square_zero",
    "ring_map_check",
    "simplex",
    "slide",
    "special_elements",
    "standard_form",
    "valuation_image",
    "verify_degeneration_move",
    "vertices",
]
