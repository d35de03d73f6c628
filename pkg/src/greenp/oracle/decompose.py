"""Splitting modules into indecomposables and naming the pieces.

The splitting engine is Fitting's lemma: pick an endomorphism theta,
factor its minimal polynomial, and cut the module along the generalized
kernels of the coprime primary parts.  Endomorphism spaces come from
the stripe solver; random theta draws are seeded.

Identification is two-staged: a lookup by the invariant triple
(dimension, head, socle) into the symbolic census, then an explicit
isomorphism against an independently built reference module.  Summands
with no hom to or from any principal-block simple are certified simple
and projective (they generate a defect-zero block) and are labeled by
dimension only.
"""

import zlib
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..diagram import PrimeContext
from ..errors import DomainError, ResourceGuardError
from ..ffalg import (
    factor,
    identity,
    kernel_basis,
    mat_mul,
    min_poly,
    poly_mul,
    rank,
)
from ..stable_ring import StableClass, census, dim_projective, dim_simple, loewy
from .homspace import hom_space, unipotent_jordan
from .reps import (
    DEFAULT_LIMITS,
    DEFAULT_SEED,
    MatRep,
    OracleLimits,
    check_oracle_prime,
    direct_sum_rep,
    signed_young_module,
    simple_d,
    sub_rep,
    tensor_rep,
)

_MAX_SPLIT_TRIALS = 8


def child_seed(seed: int, tag: str) -> int:
    """Deterministic per-task seed derivation, stable across platforms."""
    return zlib.crc32(f"{seed}:{tag}".encode()) & 0x7FFFFFFF


def restriction_jordan(rep: MatRep) -> tuple[int, ...]:
    """Jordan block sizes of the p-cycle generator, descending."""
    _, _, sizes = unipotent_jordan(rep.t, rep.ctx.p)
    return tuple(sorted(sizes, reverse=True))


def is_projective(rep: MatRep) -> bool:
    """Projective over F Sigma_p iff free over a Sylow p-subgroup."""
    if rep.degree == 0:
        return True
    return all(s == rep.ctx.p for s in restriction_jordan(rep))


def spin(rep: MatRep, vectors: np.ndarray) -> np.ndarray:
    """Column basis of the submodule generated by the given columns."""
    q = rep.ctx.p
    n = rep.degree
    from .homspace import _Echelon

    ech = _Echelon(q)
    queue = []
    for col in vectors.T:
        if ech.add(col):
            queue.append(col % q)
    while queue:
        v = queue.pop()
        for g in (rep.s, rep.t):
            w = mat_mul(g, v.reshape(n, 1), q).reshape(n)
            if ech.add(w):
                queue.append(w)
    cols = [row for _, row in sorted(ech.rows.items())]
    if not cols:
        return np.zeros((n, 0), dtype=np.int64)
    return np.array(cols, dtype=np.int64).T % q


def _algebra_words(rep: MatRep) -> list[np.ndarray]:
    q = rep.ctx.p
    s, t = rep.s, rep.t
    st = mat_mul(s, t, q)
    ts = mat_mul(t, s, q)
    return [
        identity(rep.degree),
        s,
        t,
        st,
        ts,
        mat_mul(t, t, q),
        mat_mul(st, t, q),
        mat_mul(t, st, q),
    ]


def norton_simple(rep: MatRep, seed: int = DEFAULT_SEED, tries: int = 8):
    """Certify irreducibility, or exhibit a proper submodule.

    Returns (True, None) when certified simple, (False, basis) with a
    proper nonzero invariant subspace otherwise.  The certificate is the
    standard one: for a singular algebra element theta, if every kernel
    vector of theta spins to the whole module and one kernel vector of
    theta^T spins to the whole dual, the module is simple.
    """
    q = rep.ctx.p
    n = rep.degree
    if n == 0:
        raise DomainError("the zero module is not simple")
    if n == 1:
        return True, None
    words = _algebra_words(rep)
    dual = MatRep(rep.ctx, rep.s.T.copy(), rep.t.T.copy())  # right-module transpose action
    rng = np.random.default_rng(seed)
    for _ in range(tries):
        theta = np.zeros((n, n), dtype=np.int64)
        for w in words:
            theta = (theta + int(rng.integers(q)) * w) % q
        # force a nontrivial kernel: replace theta by f(theta) for an
        # irreducible factor f of its minimal polynomial
        mp = min_poly(theta, q)
        _, facs = factor(mp, q, seed=seed)
        f0 = facs[0][0]
        th = np.zeros((n, n), dtype=np.int64)
        acc = identity(n)
        for c in f0:
            th = (th + c * acc) % q
            acc = mat_mul(acc, theta, q)
        ker = kernel_basis(th, q)
        if ker.shape[1] == 0 or ker.shape[1] == n:
            continue
        for col in ker.T:
            sub = spin(rep, col.reshape(n, 1))
            if sub.shape[1] < n:
                return False, sub
        kert = kernel_basis(th.T % q, q)
        col = kert[:, 0]
        subt = spin(dual, col.reshape(n, 1))
        if subt.shape[1] < n:
            # orthogonal complement of a right submodule is a left submodule
            comp = kernel_basis(subt.T % q, q)
            return False, comp
        return True, None
    raise AssertionError("norton_simple failed to find a singular element")


def _poly_at(theta: np.ndarray, coeffs, q: int) -> np.ndarray:
    n = theta.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    acc = identity(n)
    for c in coeffs:
        if c:
            out = (out + int(c) * acc) % q
        acc = mat_mul(acc, theta, q)
    return out


def split_indecomposable(rep: MatRep, seed: int = DEFAULT_SEED) -> list[MatRep]:
    """Split into (certified) indecomposable summands via Fitting's lemma."""
    q = rep.ctx.p
    n = rep.degree
    if n == 0:
        return []
    ends = hom_space(rep, rep, seed=child_seed(seed, "end"))
    if len(ends) == 1:
        return [rep]
    rng = np.random.default_rng(child_seed(seed, f"fit{n}"))
    candidates = []
    for trial in range(_MAX_SPLIT_TRIALS):
        theta = np.zeros((n, n), dtype=np.int64)
        for e in ends:
            theta = (theta + int(rng.integers(q)) * e) % q
        candidates.append(theta)
    candidates.extend(ends)
    for k, theta in enumerate(candidates):
        mp = min_poly(theta, q)
        _, facs = factor(mp, q, seed=child_seed(seed, f"mp{k}"))
        if len(facs) < 2:
            continue
        pieces = []
        total = 0
        for g, m in facs:
            gm = [1]
            for _ in range(m):
                gm = poly_mul(gm, g, q)
            w = kernel_basis(_poly_at(theta, gm, q), q)
            if w.shape[1] == 0:
                raise AssertionError("empty primary component in Fitting split")
            total += w.shape[1]
            pieces.append(sub_rep(rep, w))
        if total != n:
            raise AssertionError("Fitting split dimensions do not add up")
        out = []
        for piece in pieces:
            out.extend(split_indecomposable(piece, seed=child_seed(seed, f"rec{k}{piece.degree}")))
        return out
    # no candidate split the module: every basis element and several
    # random elements have primary minimal polynomial
    return [rep]


@dataclass
class ReferenceCensus:
    """Independently built reference modules for one prime."""

    ctx: PrimeContext
    simples: dict[int, MatRep]
    projectives: dict[int, MatRep]
    id_table: dict[tuple, dict]
    _stable: dict[tuple[int, int], MatRep] = field(default_factory=dict)

    def stable_rep(self, shift: int, j: int) -> MatRep:
        """Minimal module of the canonical class (shift, j), built by
        iterated syzygy from the reference simple."""
        key = (shift, j)
        if key not in self._stable:
            if shift == 0:
                self._stable[key] = self.simples[j]
            else:
                prev = self.stable_rep(shift - 1, j)
                from .omega import omega_rep

                self._stable[key] = omega_rep(prev, refs=self).rep
        return self._stable[key]


def _build_reference_census(p: int, limits: OracleLimits = DEFAULT_LIMITS) -> ReferenceCensus:
    ctx = PrimeContext(p)
    check_oracle_prime(ctx, limits)
    seed = DEFAULT_SEED
    simples = {}
    for j in range(p - 1):
        rep = simple_d(ctx, j)
        if rep.degree != dim_simple(ctx, j):
            raise AssertionError(f"D_{j} has wrong dimension")
        ok, _ = norton_simple(rep, seed=child_seed(seed, f"norton{j}"))
        if not ok:
            raise AssertionError(f"D_{j} failed the irreducibility certificate")
        if len(hom_space(rep, rep, seed=child_seed(seed, f"schur{j}"))) != 1:
            raise AssertionError(f"End(D_{j}) is not one-dimensional")
        simples[j] = rep
    projectives = {}
    for t in range(p - 1):
        rep = signed_young_module(ctx, t)
        if rep.degree != dim_projective(ctx, t):
            raise AssertionError(f"signed Young module dimension mismatch at {t}")
        if not is_projective(rep):
            raise AssertionError(f"signed Young module {t} is not projective")
        head = [len(hom_space(rep, simples[u], seed=child_seed(seed, f"pt{t}{u}"))) for u in range(p - 1)]
        if head != [1 if u == t else 0 for u in range(p - 1)]:
            raise AssertionError(f"signed Young module {t} has head {head}, not D_{t}")
        # projective with head exactly D_t and the right dimension is P_t
        projectives[t] = rep
    table: dict[tuple, dict] = {}
    for entry in census(ctx):
        key = (entry.dim, tuple(sorted(entry.head)), tuple(sorted(entry.socle)))
        if key in table:
            raise AssertionError("identification triple collision in census")
        table[key] = {
            "label": entry.label,
            "kind": entry.kind,
            "shift": entry.shift,
            "j": entry.j,
        }
    return ReferenceCensus(ctx=ctx, simples=simples, projectives=projectives, id_table=table)


@lru_cache(maxsize=None)
def reference_census(p: int) -> ReferenceCensus:
    return _build_reference_census(p)


def head_socle(rep: MatRep, refs: ReferenceCensus | None = None, seed: int = DEFAULT_SEED):
    """Multiplicities of principal-block simples in head and socle."""
    refs = refs or reference_census(rep.ctx.p)
    p = rep.ctx.p
    head = []
    socle = []
    for t in range(p - 1):
        d = refs.simples[t]
        head.extend([t] * len(hom_space(rep, d, seed=child_seed(seed, f"h{t}"))))
        socle.extend([t] * len(hom_space(d, rep, seed=child_seed(seed, f"s{t}"))))
    return tuple(head), tuple(socle)


def _iso_exists(a: MatRep, b: MatRep, seed: int) -> bool:
    """Explicit isomorphism test: some hom combination is invertible."""
    if a.degree != b.degree:
        return False
    if a.degree == 0:
        return True
    q = a.ctx.p
    homs = hom_space(a, b, seed=seed)
    if not homs:
        return False
    for h in homs:
        if rank(h, q) == a.degree:
            return True
    rng = np.random.default_rng(child_seed(seed, "iso"))
    for _ in range(24):
        x = np.zeros_like(homs[0])
        for h in homs:
            x = (x + int(rng.integers(q)) * h) % q
        if rank(x, q) == a.degree:
            return True
    return False


@dataclass(frozen=True)
class Summand:
    label: str
    kind: str  # "stable" | "projective" | "defect_zero" | "residual"
    dim: int
    shift: int = 0
    j: int = 0


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of a full Fitting decomposition with identification."""

    rep_degree: int
    summands: tuple[Summand, ...]
    residual: bool

    def label_counter(self) -> Counter:
        return Counter(s.label for s in self.summands)

    def stable_classes(self) -> Counter:
        return Counter(
            StableClass(s.shift, s.j) for s in self.summands if s.kind == "stable"
        )

    def projective_labels(self) -> Counter:
        return Counter(
            s.label for s in self.summands if s.kind in ("projective", "defect_zero")
        )


def identify_piece(piece: MatRep, refs: ReferenceCensus, seed: int = DEFAULT_SEED) -> Summand:
    """Name one indecomposable summand, confirming by explicit isomorphism."""
    ctx = piece.ctx
    head, socle = head_socle(piece, refs, seed=seed)
    if not head and not socle:
        # invisible to the principal block: must be a simple projective
        # module generating a defect-zero block
        ok, _ = norton_simple(piece, seed=child_seed(seed, "npn"))
        if ok and is_projective(piece):
            return Summand(
                label=f"NP(dim={piece.degree})", kind="defect_zero", dim=piece.degree
            )
        return Summand(label=f"residual(dim={piece.degree})", kind="residual", dim=piece.degree)
    key = (piece.degree, tuple(sorted(head)), tuple(sorted(socle)))
    info = refs.id_table.get(key)
    if info is None:
        return Summand(label=f"residual(dim={piece.degree})", kind="residual", dim=piece.degree)
    if info["kind"] == "projective":
        ref = refs.projectives[info["j"]]
    else:
        ref = refs.stable_rep(info["shift"], info["j"])
    if not _iso_exists(piece, ref, seed=child_seed(seed, f"cf{info['label']}")):
        return Summand(label=f"residual(dim={piece.degree})", kind="residual", dim=piece.degree)
    return Summand(
        label=info["label"],
        kind=info["kind"],
        dim=piece.degree,
        shift=info["shift"],
        j=info["j"],
    )


def fitting_decompose(rep: MatRep, seed: int = DEFAULT_SEED) -> DecompositionReport:
    """Split into indecomposables and identify every piece."""
    refs = reference_census(rep.ctx.p)
    pieces = split_indecomposable(rep, seed=seed)
    summands = []
    for k, piece in enumerate(pieces):
        summands.append(identify_piece(piece, refs, seed=child_seed(seed, f"id{k}")))
    summands.sort(key=lambda s: (s.kind, s.shift, s.j, s.dim, s.label))
    if sum(s.dim for s in summands) != rep.degree:
        raise AssertionError("decomposition dimensions do not add up")
    return DecompositionReport(
        rep_degree=rep.degree,
        summands=tuple(summands),
        residual=any(s.kind == "residual" for s in summands),
    )


def stable_strip(rep: MatRep, seed: int = DEFAULT_SEED):
    """Split off all projective summands; returns (core rep, report).

    The core is the direct sum of the non-projective indecomposable
    pieces, equal to the stable-class content of the module.
    """
    refs = reference_census(rep.ctx.p)
    pieces = split_indecomposable(rep, seed=seed)
    core = []
    summands = []
    for k, piece in enumerate(pieces):
        s = identify_piece(piece, refs, seed=child_seed(seed, f"strip{k}"))
        summands.append(s)
        if s.kind not in ("projective", "defect_zero"):
            core.append(piece)
    report = DecompositionReport(
        rep_degree=rep.degree,
        summands=tuple(sorted(summands, key=lambda s: (s.kind, s.shift, s.j, s.dim, s.label))),
        residual=any(s.kind == "residual" for s in summands),
    )
    return direct_sum_rep(core, ctx=rep.ctx), report


def coredim(rep: MatRep, n: int, seed: int = DEFAULT_SEED, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Dimension of the projective-free core of the n-th tensor power."""
    p = rep.ctx.p
    if p > limits.coredim_max_p:
        raise ResourceGuardError(
            f"coredim is capped at p <= {limits.coredim_max_p}; got p = {p}"
        )
    if not 1 <= n <= limits.coredim_max_n:
        raise ResourceGuardError(
            f"coredim tensor power must be in [1, {limits.coredim_max_n}]; got {n}"
        )
    power = rep
    for _ in range(n - 1):
        power = tensor_rep(power, rep)
    if power.degree > limits.max_degree:
        raise ResourceGuardError(
            f"tensor power degree {power.degree} exceeds cap {limits.max_degree}"
        )
    core, _report = stable_strip(power, seed=seed)
    return core.degree
