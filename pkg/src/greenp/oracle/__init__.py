"""Brute-force oracle: explicit GF(p) matrix modules for Sigma_p.

Everything here is independent of the combinatorial layer: modules are
constructed as honest matrix representations (permutation, Specht,
exterior powers), split with Fitting's lemma, and identified by
dimension, head, socle and explicit isomorphism.  The verify module
compares the measurements against the symbolic predictions.
"""

from .decompose import (
    DecompositionReport,
    ReferenceCensus,
    Summand,
    child_seed,
    coredim,
    fitting_decompose,
    head_socle,
    is_projective,
    norton_simple,
    reference_census,
    restriction_jordan,
    split_indecomposable,
    stable_strip,
)
from .homspace import hom_dim, hom_space
from .omega import OmegaResult, omega_rep
from .reps import (
    DEFAULT_LIMITS,
    DEFAULT_SEED,
    MatRep,
    OracleLimits,
    check_oracle_prime,
    direct_sum_rep,
    dual_rep,
    exterior_power,
    perm_module,
    quotient_rep,
    signed_young_module,
    simple_d,
    specht_rep,
    sub_rep,
    tensor_rep,
    trivial_rep,
)
from .verify import CHECK_NAMES, CheckRecord, run_verification

__all__ = [
    "CHECK_NAMES",
    "CheckRecord",
    "DEFAULT_LIMITS",
    "DEFAULT_SEED",
    "DecompositionReport",
    "MatRep",
    "OmegaResult",
    "OracleLimits",
    "ReferenceCensus",
    "Summand",
    "check_oracle_prime",
    "child_seed",
    "coredim",
    "direct_sum_rep",
    "dual_rep",
    "exterior_power",
    "fitting_decompose",
    "head_socle",
    "hom_dim",
    "hom_space",
    "is_projective",
    "norton_simple",
    "omega_rep",
    "perm_module",
    "quotient_rep",
    "reference_census",
    "restriction_jordan",
    "run_verification",
    "signed_young_module",
    "simple_d",
    "specht_rep",
    "split_indecomposable",
    "stable_strip",
    "sub_rep",
    "tensor_rep",
    "trivial_rep",
]
