"""Exact linear algebra over GF(q) and Q.

The prime-field layer operates on int64 numpy arrays with an explicit
modulus argument; the two hot kernels (mat_mul, rref) dispatch to a
compiled Cython core when built, with a pure numpy fallback selected at
import time (GREENP_FF_BACKEND=pure|compiled overrides).
"""

from .backend import backend_name
from .linalg import (
    asmat,
    char_poly,
    identity,
    inverse,
    kernel_basis,
    kronecker,
    mat_mul,
    mat_pow,
    min_poly,
    rank,
    rref,
    solve,
)
from .polys import (
    factor,
    poly_add,
    poly_deg,
    poly_deriv,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_lcm,
    poly_mod,
    poly_monic,
    poly_mul,
    poly_normalize,
    poly_pow_mod,
    poly_sub,
    squarefree_decomposition,
)

__all__ = [
    "asmat",
    "backend_name",
    "char_poly",
    "factor",
    "identity",
    "inverse",
    "kernel_basis",
    "kronecker",
    "mat_mul",
    "mat_pow",
    "min_poly",
    "poly_add",
    "poly_deg",
    "poly_deriv",
    "poly_divmod",
    "poly_eval",
    "poly_gcd",
    "poly_lcm",
    "poly_mod",
    "poly_monic",
    "poly_mul",
    "poly_normalize",
    "poly_pow_mod",
    "poly_sub",
    "rank",
    "rref",
    "solve",
    "squarefree_decomposition",
]
