"""Exact invariants of complete linear series on hyperelliptic curves.

Every line bundle on a hyperelliptic curve of arithmetic genus g >= 2
factors through the degree-two pencil as A^m (x) B with B normalized of
degree b in [0, g+1].  This package computes, in exact integer arithmetic
keyed by the pair (m, b): cohomology dimensions, ampleness classification
and morphism profiles, the Hirzebruch-surface scroll model, graded Betti
diagrams in both degree regimes, Hartshorne-Rao dimensions and regularity,
syzygy-linearity thresholds with their secant-plane obstructions, and the
enumeration and inversion of factorization types from resolution data.
"""

from .betti import POSITIVE, UNKNOWN, BettiDiagram
from .resolution_high import (
    GAMMA_ON_MINIMAL_SECTION,
    SECANT_PLANE_FROM_DUAL,
    SecantObstruction,
    betti_high,
    hilbert_numerator_check,
    np_report_high,
    rnc_obstruction_h1,
    secant_obstruction,
)
from .resolution_low import (
    LowDegreeInvariants,
    RaoProfile,
    betti_low,
    count_distinct_betti,
    enumerate_types,
    in_low_degree,
    invert_from_resolution,
    low_invariants,
    n_nu_p_report,
    oracle_rao,
    rao_dimension,
    rao_profile,
    regularity,
)
from .scroll import (
    CohomologyPair,
    DivisorClass,
    ScrollModel,
    cohomology_scroll,
    h0_p1,
    h1_p1,
    intersection_number,
    scroll_model,
)
from .series import (
    ALPHA,
    BASE_POINT_FREE_ONLY,
    BETA,
    GAMMA,
    NOT_BASE_POINT_FREE,
    VERY_AMPLE,
    AmplenessClass,
    FactorizationType,
    MorphismProfile,
    ampleness_class,
    canonical_type,
    is_base_point_free,
    is_nonspecial,
    is_very_ample,
    morphism_profile,
    normalized_h0,
    require_very_ample,
    riemann_roch,
)

__version__ = "0.1.0"


def betti_diagram(ft: FactorizationType) -> BettiDiagram:
    """Betti diagram of the linearly normal embedding, picking the regime by degree."""
    require_very_ample(ft)
    if ft.degree >= 2 * ft.g + 1:
        return betti_high(ft.g, ft.degree)
    return betti_low(ft)


__all__ = [
    "ALPHA",
    "BASE_POINT_FREE_ONLY",
    "BETA",
    "BettiDiagram",
    "CohomologyPair",
    "DivisorClass",
    "FactorizationType",
    "GAMMA",
    "GAMMA_ON_MINIMAL_SECTION",
    "LowDegreeInvariants",
    "MorphismProfile",
    "NOT_BASE_POINT_FREE",
    "POSITIVE",
    "RaoProfile",
    "SECANT_PLANE_FROM_DUAL",
    "ScrollModel",
    "SecantObstruction",
    "UNKNOWN",
    "VERY_AMPLE",
    "AmplenessClass",
    "ampleness_class",
    "betti_diagram",
    "betti_high",
    "betti_low",
    "canonical_type",
    "cohomology_scroll",
    "count_distinct_betti",
    "enumerate_types",
    "h0_p1",
    "h1_p1",
    "hilbert_numerator_check",
    "in_low_degree",
    "intersection_number",
    "invert_from_resolution",
    "is_base_point_free",
    "is_nonspecial",
    "is_very_ample",
    "low_invariants",
    "morphism_profile",
    "n_nu_p_report",
    "normalized_h0",
    "np_report_high",
    "oracle_rao",
    "rao_dimension",
    "rao_profile",
    "regularity",
    "require_very_ample",
    "riemann_roch",
    "rnc_obstruction_h1",
    "scroll_model",
    "secant_obstruction",
]
