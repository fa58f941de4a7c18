"""Certified rank bounds for Jacobians of two hyperelliptic curve families.

Upper bounds come from 2-descent dimension counts driven by unit-signature
certificates and ingested class-group 2-ranks; lower bounds come from rational
points constructed by factoring f(x) - y0^2 and measuring the multiplicative
independence of the resulting classes modulo squares.
"""

from __future__ import annotations

from .bounds import (
    BoundReport,
    GTrivialityCertificate,
    curve_min_poly,
    lower_bound_from_points,
    sophie_local_certificate,
    sophie_upper_bound,
    two_inert_in_real_cyclotomic,
    washington_bound,
    washington_curve_poly,
    washington_local_certificate,
    washington_rho_certificate,
)
from .cyclosig import (
    RhoInftyCertificate,
    SophieGermainPair,
    certify_rho_infty,
    scan_sophie_germain,
    sophie_germain_pairs,
)
from .numberfield import (
    FieldElement,
    NumberField,
    SquareClassSet,
    SquarenessUndetermined,
    delta_class_of_factor,
    independence_rank_mod_squares,
)
from .polys import RationalPoly, format_poly, min_poly_2cos
from .stats import sharpness_stats
from .stores import (
    ClassGroupRecord,
    RankRecord,
    builtin_class_groups,
    ingest_class_groups,
    ingest_rank_data,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ClassGroupRecord",
    "FieldElement",
    "GTrivialityCertificate",
    "NumberField",
    "RankRecord",
    "RationalPoly",
    "RhoInftyCertificate",
    "SophieGermainPair",
    "SquareClassSet",
    "SquarenessUndetermined",
    "builtin_class_groups",
    "certify_rho_infty",
    "curve_min_poly",
    "delta_class_of_factor",
    "format_poly",
    "independence_rank_mod_squares",
    "ingest_class_groups",
    "ingest_rank_data",
    "lower_bound_from_points",
    "min_poly_2cos",
    "scan_sophie_germain",
    "sharpness_stats",
    "sophie_germain_pairs",
    "sophie_local_certificate",
    "sophie_upper_bound",
    "two_inert_in_real_cyclotomic",
    "washington_bound",
    "washington_curve_poly",
    "washington_local_certificate",
    "washington_rho_certificate",
]
