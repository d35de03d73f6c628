"""Symbolic calculator for the stable Green ring of F Sigma_p, with a
matrix-level oracle that rebuilds the same answers from explicit GF(p)
representations."""

from .diagram import PrimeContext, RectProfile, layer_ends, r_set, rect_bounds, rect_profile, s_factors
from .errors import DomainError, ResourceGuardError
from .expressions import parse_element
from .invariants import GammaValue, gamma_class, gamma_cp, gamma_element, restriction_jordan_stable
from .stable_ring import (
    ArQuiver,
    CensusEntry,
    LoewyPair,
    StableClass,
    StableElement,
    ar_quiver,
    canonicalize,
    census,
    dim_class,
    dim_projective,
    dim_simple,
    dual,
    ext_dim,
    loewy,
    min_resolution_term,
    syzygy,
    tensor,
)
from .upsilon import (
    FieldSpec,
    LocalDecomposition,
    RadicalResult,
    UpsilonAlgebra,
    UpsilonReport,
    is_semisimple,
    local_decomposition,
    radical,
    upsilon_report,
)

__version__ = "0.1.0"

__all__ = [
    "ArQuiver",
    "CensusEntry",
    "DomainError",
    "FieldSpec",
    "GammaValue",
    "LocalDecomposition",
    "LoewyPair",
    "PrimeContext",
    "RadicalResult",
    "RectProfile",
    "ResourceGuardError",
    "StableClass",
    "StableElement",
    "UpsilonAlgebra",
    "UpsilonReport",
    "ar_quiver",
    "canonicalize",
    "census",
    "dim_class",
    "dim_projective",
    "dim_simple",
    "dual",
    "ext_dim",
    "gamma_class",
    "gamma_cp",
    "gamma_element",
    "is_semisimple",
    "layer_ends",
    "local_decomposition",
    "loewy",
    "min_resolution_term",
    "parse_element",
    "r_set",
    "rect_bounds",
    "rect_profile",
    "radical",
    "restriction_jordan_stable",
    "s_factors",
    "syzygy",
    "tensor",
    "upsilon_report",
]
