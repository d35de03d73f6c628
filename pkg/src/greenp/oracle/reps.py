"""Explicit matrix representations of Sigma_p over GF(p).

A representation is a pair of generator matrices for s = (1 2) and
t = (1 2 ... p), acting on column vectors.  Base modules are built from
the permutation module on p points; everything else is derived by
functorial constructions (quotients, exterior powers, duals, tensor
products, submodules), which preserve the defining relations.

The only randomness anywhere downstream is seeded explicitly; module
constructors here are deterministic.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from ..diagram import PrimeContext
from ..errors import DomainError, ResourceGuardError
from ..ffalg import identity, inverse, kronecker, mat_mul, mat_pow, solve

DEFAULT_SEED = 0x5EED


@dataclass(frozen=True)
class OracleLimits:
    """Resource caps for brute-force module calculations."""

    max_p: int = 7
    max_degree: int = 4000
    coredim_max_p: int = 5
    coredim_max_n: int = 4


DEFAULT_LIMITS = OracleLimits()


def check_oracle_prime(ctx: PrimeContext, limits: OracleLimits = DEFAULT_LIMITS) -> None:
    if ctx.p > limits.max_p:
        raise ResourceGuardError(
            f"matrix oracle is capped at p <= {limits.max_p}; got p = {ctx.p}"
        )


@dataclass(frozen=True)
class MatRep:
    """Generators of a Sigma_p action on GF(p)^degree, acting on columns."""

    ctx: PrimeContext
    s: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        if self.s.shape != self.t.shape or self.s.ndim != 2 or self.s.shape[0] != self.s.shape[1]:
            raise DomainError("generator matrices must be square and of equal size")

    @property
    def degree(self) -> int:
        return self.s.shape[0]

    def verify_relations(self) -> None:
        """Spot-check the defining relations of Sigma_p on the generators.

        s^2 = t^p = (st)^{p-1} = 1 and (s t^{-1} s t)^3 = 1; quotients and
        tensor constructions preserve them, so this is only run on base
        modules at construction time.
        """
        p, q = self.ctx.p, self.ctx.p
        n = self.degree
        if n == 0:
            return
        eye = identity(n)
        if (mat_mul(self.s, self.s, q) != eye).any():
            raise AssertionError("s^2 != 1")
        if (mat_pow(self.t, p, q) != eye).any():
            raise AssertionError("t^p != 1")
        st = mat_mul(self.s, self.t, q)
        if (mat_pow(st, p - 1, q) != eye).any():
            raise AssertionError("(st)^(p-1) != 1")
        tinv = mat_pow(self.t, p - 1, q)
        w = mat_mul(mat_mul(self.s, tinv, q), mat_mul(self.s, self.t, q), q)
        if (mat_pow(w, 3, q) != eye).any():
            raise AssertionError("(s t^-1 s t)^3 != 1")


def _perm_matrix(images: list[int]) -> np.ndarray:
    n = len(images)
    m = np.zeros((n, n), dtype=np.int64)
    for k, img in enumerate(images):
        m[img, k] = 1
    return m


def perm_module(ctx: PrimeContext) -> MatRep:
    """Natural permutation module on p points."""
    p = ctx.p
    s_img = list(range(p))
    s_img[0], s_img[1] = 1, 0
    t_img = [(k + 1) % p for k in range(p)]
    rep = MatRep(ctx, _perm_matrix(s_img), _perm_matrix(t_img))
    rep.verify_relations()
    return rep


def _perm_on_specht(ctx: PrimeContext, images: list[int]) -> np.ndarray:
    # basis e_k = t_k - t_0 for k = 1..p-1; sigma e_k = e_{sigma(k)} - e_{sigma(0)}
    p = ctx.p
    m = np.zeros((p - 1, p - 1), dtype=np.int64)
    for k in range(1, p):
        if images[k] != 0:
            m[images[k] - 1, k - 1] += 1
        if images[0] != 0:
            m[images[0] - 1, k - 1] -= 1
    return m % p


def specht_s1(ctx: PrimeContext) -> MatRep:
    """Hook Specht module S_1: the natural (p-1)-dimensional submodule."""
    p = ctx.p
    s_img = list(range(p))
    s_img[0], s_img[1] = 1, 0
    t_img = [(k + 1) % p for k in range(p)]
    rep = MatRep(ctx, _perm_on_specht(ctx, s_img), _perm_on_specht(ctx, t_img))
    rep.verify_relations()
    return rep


def _det_mod(m: np.ndarray, q: int) -> int:
    a = m.copy() % q
    n = a.shape[0]
    det = 1
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if a[r, c] % q:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != c:
            a[[c, piv]] = a[[piv, c]]
            det = -det
        det = (det * int(a[c, c])) % q
        inv = pow(int(a[c, c]), q - 2, q)
        for r in range(c + 1, n):
            f = (int(a[r, c]) * inv) % q
            if f:
                a[r] = (a[r] - f * a[c]) % q
    return det % q


def colex_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of range(n) in colexicographic order."""
    return sorted(combinations(range(n), k), key=lambda s: s[::-1])


def _exterior_matrix(a: np.ndarray, k: int, q: int) -> np.ndarray:
    n = a.shape[0]
    subsets = colex_subsets(n, k)
    d = len(subsets)
    out = np.zeros((d, d), dtype=np.int64)
    for cj, col in enumerate(subsets):
        block = a[:, col]
        for ci, row in enumerate(subsets):
            out[ci, cj] = _det_mod(block[row, :], q)
    return out


def exterior_power(rep: MatRep, k: int) -> MatRep:
    """k-th exterior power on the colex-ordered basis of k-subsets."""
    n = rep.degree
    if not 0 <= k <= n:
        raise DomainError(f"exterior power degree {k} outside [0, {n}]")
    q = rep.ctx.p
    if k == 0:
        return MatRep(rep.ctx, identity(1), identity(1))
    return MatRep(
        rep.ctx,
        _exterior_matrix(rep.s, k, q),
        _exterior_matrix(rep.t, k, q),
    )


def sub_rep(rep: MatRep, basis: np.ndarray) -> MatRep:
    """Restrict to the invariant subspace spanned by the given columns."""
    q = rep.ctx.p
    if basis.shape[1] == 0:
        z = np.zeros((0, 0), dtype=np.int64)
        return MatRep(rep.ctx, z, z)
    gens = []
    for a in (rep.s, rep.t):
        img = mat_mul(a, basis, q)
        coords = solve(basis, img, q)
        if coords is None:
            raise DomainError("subspace is not invariant under the action")
        gens.append(coords)
    return MatRep(rep.ctx, gens[0], gens[1])


def quotient_rep(rep: MatRep, basis: np.ndarray) -> MatRep:
    """Quotient by the invariant subspace spanned by the given columns."""
    from ..ffalg import rref

    q = rep.ctx.p
    n = rep.degree
    k = basis.shape[1]
    if k == 0:
        return rep
    red, rk, pivots = rref(basis.T, q)
    if rk != k:
        raise DomainError("subspace basis is not independent")
    free = [c for c in range(n) if c not in set(pivots)]
    u = np.hstack([basis, identity(n)[:, free]])
    uinv = inverse(u, q)
    gens = []
    for a in (rep.s, rep.t):
        m = mat_mul(mat_mul(uinv, a, q), u, q)
        gens.append(m[k:, k:].copy())
    return MatRep(rep.ctx, gens[0], gens[1])


def dual_rep(rep: MatRep) -> MatRep:
    """Contragredient: g acts by the inverse transpose."""
    q = rep.ctx.p
    if rep.degree == 0:
        return rep
    return MatRep(
        rep.ctx,
        inverse(rep.s, q).T.copy(),
        inverse(rep.t, q).T.copy(),
    )


def tensor_rep(a: MatRep, b: MatRep) -> MatRep:
    if a.ctx != b.ctx:
        raise DomainError("tensor of representations over different primes")
    q = a.ctx.p
    return MatRep(a.ctx, kronecker(a.s, b.s, q), kronecker(a.t, b.t, q))


def direct_sum_rep(reps: list[MatRep], ctx: PrimeContext | None = None) -> MatRep:
    if not reps:
        if ctx is None:
            raise DomainError("empty direct sum needs an explicit context")
        z = np.zeros((0, 0), dtype=np.int64)
        return MatRep(ctx, z, z)
    ctx = reps[0].ctx
    if any(r.ctx != ctx for r in reps):
        raise DomainError("direct sum of representations over different primes")
    n = sum(r.degree for r in reps)
    s = np.zeros((n, n), dtype=np.int64)
    t = np.zeros((n, n), dtype=np.int64)
    at = 0
    for r in reps:
        d = r.degree
        s[at : at + d, at : at + d] = r.s
        t[at : at + d, at : at + d] = r.t
        at += d
    return MatRep(ctx, s, t)


def trivial_rep(ctx: PrimeContext) -> MatRep:
    return MatRep(ctx, identity(1), identity(1))


def simple_d(ctx: PrimeContext, j: int, limits: OracleLimits = DEFAULT_LIMITS) -> MatRep:
    """The hook simple D_j, built as the j-th exterior power of D_1.

    D_1 is S_1 modulo its one-dimensional fixed line sum(e_k).
    """
    check_oracle_prime(ctx, limits)
    ctx.check_simple_index(j)
    if j == 0:
        return trivial_rep(ctx)
    s1 = specht_s1(ctx)
    fixed = np.ones((ctx.p - 1, 1), dtype=np.int64)
    d1 = quotient_rep(s1, fixed)
    if j == 1:
        return d1
    rep = exterior_power(d1, j)
    if rep.degree != comb(ctx.p - 2, j):
        raise AssertionError("exterior power dimension mismatch for D_j")
    return rep


def specht_rep(ctx: PrimeContext, i: int, limits: OracleLimits = DEFAULT_LIMITS) -> MatRep:
    """The hook Specht module S_i as the i-th exterior power of S_1."""
    check_oracle_prime(ctx, limits)
    p = ctx.p
    if not 0 <= i <= p - 1:
        raise DomainError(f"Specht index {i} outside [0, {p - 1}] for p = {p}")
    if i == 0:
        return trivial_rep(ctx)
    rep = exterior_power(specht_s1(ctx), i)
    if rep.degree != comb(p - 1, i):
        raise AssertionError("exterior power dimension mismatch for S_i")
    return rep


def signed_young_module(ctx: PrimeContext, i: int, limits: OracleLimits = DEFAULT_LIMITS) -> MatRep:
    """The signed Young module Lambda^{i+1} of the permutation module.

    For i in [0, p-2] this has the dimension of the projective cover P_i;
    projectivity and head are certified downstream, not assumed.
    """
    check_oracle_prime(ctx, limits)
    ctx.check_simple_index(i)
    return exterior_power(perm_module(ctx), i + 1)
