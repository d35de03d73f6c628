"""The tensor-semisimplicity ring Upsilon of F Sigma_p over Q and GF(q).

Upsilon is the (p-1)-dimensional commutative ring on basis e_0, ...,
e_{p-2} with e_i e_j = sum of e_t over t in R(i, j); e_0 is the unit.
Scalars are extended to a coefficient field K and the questions are:
radical, semisimplicity, and the dimensions of the local summands.

Radical computation is exact in both characteristics: over Q it is the
kernel of the trace form tr(L_x L_y); over GF(q) it is the kernel of
the q^m-power map with q^m >= dim, which is GF(q)-linear here because
the algebra is commutative.  Every reported radical basis vector is
certified nilpotent by explicit powering.

Local summand dimensions are reported geometrically, i.e. over an
algebraic closure of K: a local K-block of dimension n with residue
field of degree d over K contributes d summands of dimension n/d.  This
avoids constructing extension fields while still matching the block
structure that idempotents over the closure produce.  Over GF(q) block
counting is deterministic (dim of the fixed space of Frobenius); over Q
a block certificate may fail beyond what rational root and discriminant
tests decide, in which case the decomposition is reported as undecided.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .diagram import PrimeContext, _is_prime, r_set
from .errors import DomainError
from .ffalg import factor, kernel_basis, mat_mul, min_poly, poly_mul, rank, solve
from .ffalg.rational import (
    fkernel,
    fmat_mul,
    fmin_poly,
    fpoly_mul,
    frref,
    int_det,
    rational_factor,
)

_RANDOM_TRIES_Q = 40


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(q) for prime q, or Q when q is None."""

    q: int | None = None

    def __post_init__(self):
        if self.q is not None and not _is_prime(self.q):
            raise DomainError(f"field order {self.q} is not prime")

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(None)

    @staticmethod
    def gf(q: int) -> "FieldSpec":
        return FieldSpec(q)

    @staticmethod
    def parse(text) -> "FieldSpec":
        if isinstance(text, int):
            return FieldSpec(text)
        t = text.strip()
        if t.upper() == "Q":
            return FieldSpec(None)
        try:
            q = int(t)
        except ValueError:
            raise DomainError(f"field must be 'Q' or a prime number, got {text!r}")
        return FieldSpec(q)

    @property
    def is_rational(self) -> bool:
        return self.q is None

    def json_name(self):
        return "Q" if self.q is None else self.q

    def __str__(self):
        return "Q" if self.q is None else f"GF({self.q})"


class UpsilonAlgebra:
    """Structure constants of Upsilon(F Sigma_p), verified at construction."""

    def __init__(self, ctx: PrimeContext):
        self.ctx = ctx
        d = ctx.p - 1
        self.dim = d
        c = np.zeros((d, d, d), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                for t in r_set(ctx, i, j):
                    c[i, j, t] = 1
        self.struct = c
        self._verify()

    def _verify(self):
        c = self.struct
        d = self.dim
        if (c != c.transpose(1, 0, 2)).any():
            raise AssertionError("structure constants are not commutative")
        if (c[0] != np.eye(d, dtype=np.int64)).any():
            raise AssertionError("e_0 is not a left identity")
        lhs = np.einsum("ijt,tks->ijks", c, c)
        rhs = np.einsum("jkt,its->ijks", c, c)
        if (lhs != rhs).any():
            raise AssertionError("structure constants are not associative")

    def left_mult_int(self, vec) -> np.ndarray:
        """Integer matrix of multiplication by vec on the basis."""
        v = np.asarray(vec, dtype=np.int64)
        return np.einsum("i,ijt->tj", v, self.struct)

    def gram_int(self) -> np.ndarray:
        """Integer Gram matrix of the trace form tr(L_a L_b)."""
        d = self.dim
        ls = [self.left_mult_int(np.eye(d, dtype=np.int64)[i]) for i in range(d)]
        g = np.zeros((d, d), dtype=np.int64)
        for a in range(d):
            for b in range(d):
                g[a, b] = int(np.trace(ls[a] @ ls[b]))
        return g

    def trace_discriminant(self) -> int:
        """det of the integer trace form; its prime divisors flag the
        characteristics where Upsilon degenerates."""
        return int_det(self.gram_int().tolist())

    def mult_mod(self, x, y, q: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64) % q
        y = np.asarray(y, dtype=np.int64) % q
        return np.einsum("i,j,ijt->t", x, y, self.struct) % q

    def power_mod(self, x, e: int, q: int) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        out[0] = 1
        base = np.asarray(x, dtype=np.int64) % q
        while e:
            if e & 1:
                out = self.mult_mod(out, base, q)
            base = self.mult_mod(base, base, q)
            e >>= 1
        return out

    def mult_frac(self, x, y) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for t in np.nonzero(self.struct[i, j])[0]:
                    out[int(t)] += xi * yj
        return out

    def power_frac(self, x, e: int) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        out[0] = Fraction(1)
        base = [Fraction(v) for v in x]
        while e:
            if e & 1:
                out = self.mult_frac(out, base)
            base = self.mult_frac(base, base)
            e >>= 1
        return out


@dataclass(frozen=True)
class RadicalResult:
    field: FieldSpec
    dimension: int
    basis: tuple[tuple, ...]
    nilpotency_verified: bool


def _frobenius_exponent(q: int, dim: int) -> int:
    m = 1
    while q**m < dim:
        m += 1
    return m


def radical(alg: UpsilonAlgebra, field: FieldSpec) -> RadicalResult:
    """Jacobson radical basis over the requested field."""
    d = alg.dim
    if field.is_rational:
        gram = alg.gram_int()
        basis = fkernel([[Fraction(int(v)) for v in row] for row in gram])
        for vec in basis:
            power = alg.power_frac(vec, d)
            if any(c != 0 for c in power):
                raise AssertionError("rational radical vector is not nilpotent")
        return RadicalResult(
            field=field,
            dimension=len(basis),
            basis=tuple(tuple(v) for v in basis),
            nilpotency_verified=True,
        )
    q = field.q
    m = _frobenius_exponent(q, d)
    cols = []
    eye = np.eye(d, dtype=np.int64)
    for i in range(d):
        cols.append(alg.power_mod(eye[i], q**m, q))
    fr = np.array(cols, dtype=np.int64).T % q
    ker = kernel_basis(fr, q)
    basis = []
    for col in ker.T:
        power = alg.power_mod(col, d, q)
        if power.any():
            raise AssertionError("radical vector is not nilpotent mod q")
        basis.append(tuple(int(v) for v in col))
    return RadicalResult(
        field=field,
        dimension=ker.shape[1],
        basis=tuple(basis),
        nilpotency_verified=True,
    )


def is_semisimple(alg: UpsilonAlgebra, field: FieldSpec) -> bool:
    return radical(alg, field).dimension == 0


@dataclass(frozen=True)
class LocalDecomposition:
    """Geometric local summand dimensions, or undecided over Q."""

    field: FieldSpec
    summand_dims: tuple[int, ...] | None
    undecided: bool
    blocks: tuple[tuple[int, int], ...]  # (block dim over field, residue degree)


class _GFBlock:
    """A unital ideal summand over GF(q), in ambient coordinates."""

    def __init__(self, alg: UpsilonAlgebra, basis: np.ndarray, q: int):
        self.alg = alg
        self.basis = basis % q  # ambient dim x block dim, columns
        self.q = q

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def _coords(self, vecs: np.ndarray) -> np.ndarray:
        sol = solve(self.basis, vecs % self.q, self.q)
        if sol is None:
            raise AssertionError("vector left the block during decomposition")
        return sol

    def left_mult(self, ambient_vec) -> np.ndarray:
        q = self.q
        imgs = []
        for col in self.basis.T:
            imgs.append(self.alg.mult_mod(ambient_vec, col, q))
        return self._coords(np.array(imgs, dtype=np.int64).T)

    def frobenius_fixed_and_radical(self) -> tuple[np.ndarray, int]:
        """(solution space of x^q = x in block coords, radical dim).

        Solutions of x^q = x lift the diagonal copies of GF(q) in the
        semisimple quotient, one per local block, so their count is the
        number of blocks.  The radical is the kernel of x -> x^{q^m}
        with q^m >= dim, which kills exactly the nilpotents."""
        q = self.q
        m = _frobenius_exponent(q, self.alg.dim)
        imgs_m, imgs_1 = [], []
        for col in self.basis.T:
            imgs_m.append(self.alg.power_mod(col, q**m, q))
            imgs_1.append(self.alg.power_mod(col, q, q))
        fr_m = self._coords(np.array(imgs_m, dtype=np.int64).T)
        fr_1 = self._coords(np.array(imgs_1, dtype=np.int64).T)
        raddim = self.dim - rank(fr_m, q)
        fixed = kernel_basis((fr_1 - np.eye(self.dim, dtype=np.int64)) % q, q)
        return fixed, raddim


def _split_gf_block(block: _GFBlock, out: list[tuple[int, int]]):
    q = block.q
    fixed, raddim = block.frobenius_fixed_and_radical()
    n_blocks = fixed.shape[1]
    if n_blocks == 1:
        d = block.dim - raddim
        if d <= 0 or block.dim % d:
            raise AssertionError("residue degree does not divide the block dimension")
        out.append((block.dim, d))
        return
    # some Frobenius-fixed vector acts with a split minimal polynomial
    for col in fixed.T:
        ambient = mat_mul(block.basis, col.reshape(-1, 1), q).reshape(-1)
        lmat = block.left_mult(ambient)
        mp = min_poly(lmat, q)
        _, facs = factor(mp, q, seed=0)
        if len(facs) < 2:
            continue
        for g, mult in facs:
            gm = [1]
            for _ in range(mult):
                gm = poly_mul(gm, g, q)
            acc = np.zeros((block.dim, block.dim), dtype=np.int64)
            powm = np.eye(block.dim, dtype=np.int64)
            for c in gm:
                acc = (acc + c * powm) % q
                powm = mat_mul(powm, lmat, q)
            ker = kernel_basis(acc, q)
            if ker.shape[1] == 0:
                raise AssertionError("empty primary part while splitting a block")
            sub = mat_mul(block.basis, ker, q)
            _split_gf_block(_GFBlock(block.alg, sub, q), out)
        return
    raise AssertionError("block count > 1 but no fixed vector split the block")


class _QBlock:
    """A unital ideal summand over Q, columns of Fractions."""

    def __init__(self, alg: UpsilonAlgebra, basis: list[list[Fraction]]):
        self.alg = alg
        self.basis = basis  # list of columns, each a list over ambient dim

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _coords(self, vecs: list[list[Fraction]]) -> list[list[Fraction]]:
        amb = len(self.basis[0])
        aug_cols = self.basis + vecs
        mat = [[aug_cols[c][r] for c in range(len(aug_cols))] for r in range(amb)]
        red, _rk, pivots = frref(mat)
        k = self.dim
        if any(pc >= k for pc in pivots):
            raise AssertionError("vector left the block during decomposition")
        out = []
        for vi in range(len(vecs)):
            col = [Fraction(0)] * k
            for row, pc in enumerate(pivots):
                col[pc] = red[row][k + vi]
            out.append(col)
        return out

    def left_mult(self, ambient_vec: list[Fraction]) -> list[list[Fraction]]:
        imgs = [self.alg.mult_frac(ambient_vec, col) for col in self.basis]
        cols = self._coords(imgs)
        k = self.dim
        return [[cols[c][r] for c in range(k)] for r in range(k)]

    def block_radical_dim(self) -> int:
        k = self.dim
        ls = [self.left_mult(col) for col in self.basis]
        gram = [
            [
                sum(
                    (fmat_mul(ls[a], ls[b])[t][t] for t in range(k)),
                    Fraction(0),
                )
                for b in range(k)
            ]
            for a in range(k)
        ]
        return len(fkernel(gram))


def _split_q_block(block: _QBlock, seed: int, out: list[tuple[int, int]]) -> bool:
    """Returns False if the block verdict is undecided."""
    alg = block.alg
    amb = alg.dim
    rng = np.random.default_rng(seed)
    candidates: list[list[Fraction]] = []
    for i in range(amb):
        v = [Fraction(0)] * amb
        v[i] = Fraction(1)
        candidates.append(v)
    for _ in range(_RANDOM_TRIES_Q):
        candidates.append([Fraction(int(rng.integers(-3, 4))) for _ in range(amb)])
    best_primary: tuple[int, int] | None = None  # (deg of irred factor, decided)
    for cand in candidates:
        lmat = block.left_mult(cand)
        mp = fmin_poly(lmat)
        facs, decided = rational_factor(mp)
        if len(facs) >= 2:
            for g, mult in facs:
                gm = [Fraction(1)]
                for _ in range(mult):
                    gm = fpoly_mul(gm, g)
                acc = [[Fraction(0)] * block.dim for _ in range(block.dim)]
                powm = [
                    [Fraction(1) if r == c else Fraction(0) for c in range(block.dim)]
                    for r in range(block.dim)
                ]
                for c in gm:
                    for r in range(block.dim):
                        for s in range(block.dim):
                            acc[r][s] += c * powm[r][s]
                    powm = fmat_mul(powm, lmat)
                ker = fkernel(acc)
                if not ker:
                    raise AssertionError("empty primary part while splitting a Q-block")
                sub_cols = []
                for v in ker:
                    col = [
                        sum(
                            (block.basis[c][r] * v[c] for c in range(block.dim)),
                            Fraction(0),
                        )
                        for r in range(amb)
                    ]
                    sub_cols.append(col)
                if not _split_q_block(_QBlock(alg, sub_cols), seed + 1, out):
                    return False
            return True
        # primary minimal polynomial: candidate certificate for locality
        if len(facs) == 1 and decided:
            g, _m = facs[0]
            deg = len(g) - 1
            if best_primary is None or deg > best_primary[0]:
                best_primary = (deg, 1)
    raddim = block.block_radical_dim()
    d = block.dim - raddim
    if best_primary is not None and best_primary[0] == d:
        if d <= 0 or block.dim % d:
            raise AssertionError("residue degree does not divide the Q-block dimension")
        out.append((block.dim, d))
        return True
    return False


def local_decomposition(
    alg: UpsilonAlgebra, field: FieldSpec, seed: int = 0
) -> LocalDecomposition:
    """Split the regular module into local blocks and report geometric dims."""
    d = alg.dim
    if field.is_rational:
        eye = [
            [Fraction(1) if r == c else Fraction(0) for r in range(d)]
            for c in range(d)
        ]
        out: list[tuple[int, int]] = []
        decided = _split_q_block(_QBlock(alg, eye), seed, out)
        if not decided:
            return LocalDecomposition(
                field=field, summand_dims=None, undecided=True, blocks=()
            )
    else:
        q = field.q
        out = []
        _split_gf_block(_GFBlock(alg, np.eye(d, dtype=np.int64), q), out)
    dims = []
    for bdim, rdeg in out:
        dims.extend([bdim // rdeg] * rdeg)
    if sum(dims) != d:
        raise AssertionError("local summand dimensions do not add up")
    return LocalDecomposition(
        field=field,
        summand_dims=tuple(sorted(dims)),
        undecided=False,
        blocks=tuple(sorted(out)),
    )


@dataclass(frozen=True)
class UpsilonReport:
    """Everything the CLI reports about Upsilon over one field."""

    p: int
    field: FieldSpec
    dim: int
    radical_dim: int
    semisimple: bool
    radical_basis: tuple[tuple, ...]
    summand_dims: tuple[int, ...] | None
    undecided: bool
    trace_discriminant: int

    def to_json_dict(self) -> dict:
        def render_val(v):
            if isinstance(v, Fraction):
                return str(v)
            return int(v)

        return {
            "p": self.p,
            "field": self.field.json_name(),
            "dim": self.dim,
            "radical_dim": self.radical_dim,
            "semisimple": self.semisimple,
            "radical_basis": [[render_val(x) for x in vec] for vec in self.radical_basis],
            "summand_dims": list(self.summand_dims) if self.summand_dims is not None else None,
            "undecided": self.undecided,
            "trace_discriminant": self.trace_discriminant,
        }


def upsilon_report(ctx: PrimeContext, field: FieldSpec, decompose: bool = True, seed: int = 0) -> UpsilonReport:
    alg = UpsilonAlgebra(ctx)
    rad = radical(alg, field)
    if decompose:
        dec = local_decomposition(alg, field, seed=seed)
        dims, undecided = dec.summand_dims, dec.undecided
    else:
        dims, undecided = None, False
    return UpsilonReport(
        p=ctx.p,
        field=field,
        dim=alg.dim,
        radical_dim=rad.dimension,
        semisimple=rad.dimension == 0,
        radical_basis=rad.basis,
        summand_dims=dims,
        undecided=undecided,
        trace_discriminant=alg.trace_discriminant(),
    )
