"""Exact intersection-theory engine for the degree of the third secant
variety of a genus-2 curve of degree d >= 8.

The pipeline: Chern characters of the two section bundles on the degree-3
Picard surface come out of a Riemann-Roch pushforward, Porteous' formula
turns them into a banded determinant over Q[T, h]/(T^3, h^(d-1)), and the
degree is read off against the theta self-intersection.  Three independent
determinant routes and a classical count cross-check every answer.
"""

from .degree import (
    DegreeReport,
    berzolari,
    binomial,
    degree_pairing,
    degree_report,
    secant3_degree,
    verify_binomial_identities,
)
from .porteous import (
    METHODS,
    PorteousMatrix,
    PorteousResult,
    TwistedBundle,
    chern_coefficient_formula,
    chern_coefficients,
    determinant_cofactor,
    determinant_formula,
    determinant_recurrence,
    multiplication_map_bundles,
    porteous_class,
    recurrence_determinants,
    source_chern_series,
    target_chern_series,
    twist_by_hyperplane,
    virtual_chern_series,
    virtual_chern_series_closed_form,
    virtual_chern_series_expansion,
)
from .riemann_roch import (
    BundleData,
    CurveClass,
    UpstreamClass,
    bundle_characters,
    line_bundle_character,
    poincare_character,
    poincare_first_chern,
    pushforward_to_picard,
    riemann_roch_pushforward,
    todd_from_chern,
)
from .ring import AmbientClass, ChernSeries, Rational, RingMismatchError, ThetaPoly

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # rings and series
    "Rational",
    "RingMismatchError",
    "ThetaPoly",
    "AmbientClass",
    "ChernSeries",
    # upstream cohomology and Riemann-Roch
    "CurveClass",
    "UpstreamClass",
    "BundleData",
    "todd_from_chern",
    "pushforward_to_picard",
    "riemann_roch_pushforward",
    "line_bundle_character",
    "poincare_first_chern",
    "poincare_character",
    "bundle_characters",
    # Porteous pipeline
    "METHODS",
    "TwistedBundle",
    "PorteousMatrix",
    "PorteousResult",
    "multiplication_map_bundles",
    "source_chern_series",
    "target_chern_series",
    "twist_by_hyperplane",
    "virtual_chern_series",
    "virtual_chern_series_closed_form",
    "virtual_chern_series_expansion",
    "chern_coefficient_formula",
    "chern_coefficients",
    "determinant_cofactor",
    "determinant_recurrence",
    "determinant_formula",
    "recurrence_determinants",
    "porteous_class",
    # degrees
    "binomial",
    "verify_binomial_identities",
    "degree_pairing",
    "secant3_degree",
    "berzolari",
    "DegreeReport",
    "degree_report",
]
