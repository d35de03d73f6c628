"""Intertwiner spaces between representations, organized around the p-cycle.

The generator t is unipotent over GF(p), so each module has a Jordan
basis for t.  An intertwiner must commute with t, and the solutions of
Y J = J' Y for nilpotent Jordan matrices are supported on explicit
diagonal stripes, one free parameter per stripe; this cuts the unknown
count from deg*deg' to roughly deg*deg'/p before the condition for the
second generator s is imposed.

The s-condition is imposed by sampling: build the constraint matrix at
a set of positions, take its kernel (a superset of the true space), and
verify each candidate against the full equation, feeding back any
failing positions.  The loop is exact: it only terminates when every
kernel vector satisfies the full system.
"""

import numpy as np

from ..ffalg import identity, inverse, kernel_basis, mat_mul, mat_pow, rank, rref
from .reps import MatRep


class _Echelon:
    """Incremental row echelon over GF(q) for membership tests."""

    def __init__(self, q: int):
        self.q = q
        self.rows: dict[int, np.ndarray] = {}

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = v % self.q
        for pc in sorted(self.rows):
            c = int(v[pc])
            if c:
                v = (v - c * self.rows[pc]) % self.q
        return v

    def add(self, v: np.ndarray) -> bool:
        """Insert v; returns True if it enlarged the span."""
        w = self.reduce(v)
        nz = np.nonzero(w)[0]
        if nz.size == 0:
            return False
        pc = int(nz[0])
        inv = pow(int(w[pc]), self.q - 2, self.q)
        self.rows[pc] = (w * inv) % self.q
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


def unipotent_jordan(a: np.ndarray, q: int) -> tuple[np.ndarray, np.ndarray, list[int]]:
    """Jordan basis of a unipotent matrix: returns (P, P^{-1}, sizes).

    P^{-1} a P = I + J with J the nilpotent Jordan matrix whose block
    sizes are returned in descending order.  The conjugation is verified
    before returning; a failure means a bug, not bad input.
    """
    n = a.shape[0]
    if n == 0:
        return identity(0), identity(0), []
    nil = (a - identity(n)) % q
    powers = [identity(n) % q]
    while rank(powers[-1], q) > 0:
        powers.append(mat_mul(powers[-1], nil, q))
    m = len(powers) - 1  # nilpotency index
    kernels = [kernel_basis(powers[s], q) for s in range(m + 1)]
    tops: list[tuple[np.ndarray, int]] = []
    for s in range(m, 0, -1):
        ech = _Echelon(q)
        for col in kernels[s - 1].T:
            ech.add(col)
        for u, h in tops:
            if h > s:
                ech.add(mat_mul(powers[h - s], u.reshape(n, 1), q).reshape(n))
        for col in kernels[s].T:
            if ech.add(col):
                tops.append((col, s))
    cols = []
    for u, h in tops:
        chain = [u]
        for _ in range(h - 1):
            chain.append(mat_mul(nil, chain[-1].reshape(n, 1), q).reshape(n))
        cols.extend(reversed(chain))
    p_mat = np.array(cols, dtype=np.int64).T % q
    p_inv = inverse(p_mat, q)
    sizes = [h for _, h in tops]
    check = mat_mul(mat_mul(p_inv, a, q), p_mat, q)
    expect = identity(n)
    at = 0
    for h in sizes:
        for k in range(h - 1):
            expect[at + k, at + k + 1] = 1
        at += h
    if (check != expect % q).any():
        raise AssertionError("Jordan basis verification failed")
    return p_mat, p_inv, sizes


def _stripes(sizes_rows: list[int], sizes_cols: list[int]) -> list[tuple[int, int, int]]:
    """Stripe descriptors (row0, col0, length) for Y J_cols = J_rows Y.

    For a block pair of sizes (u rows, v cols) the solutions are the
    diagonals starting at (0, c0) for c0 >= max(0, v - u), each reaching
    the right edge of the block; min(u, v) parameters per pair.
    """
    out = []
    r_off = 0
    for u in sizes_rows:
        c_off = 0
        for v in sizes_cols:
            for c0 in range(max(0, v - u), v):
                out.append((r_off, c_off + c0, v - c0))
            c_off += v
        r_off += u
    return out


def _assemble(stripes, coeffs, nrows, ncols, q) -> np.ndarray:
    y = np.zeros((nrows, ncols), dtype=np.int64)
    for (r0, c0, ln), c in zip(stripes, coeffs):
        c = int(c) % q
        if c:
            idx = np.arange(ln)
            y[r0 + idx, c0 + idx] = (y[r0 + idx, c0 + idx] + c) % q
    return y


def hom_space(ra: MatRep, rb: MatRep, seed: int = 0) -> list[np.ndarray]:
    """Basis of Hom(ra, rb): matrices X with X ra.g = rb.g X for g = s, t.

    Exact for any seed; the seed only steers which constraint positions
    are sampled first.  Every returned X is verified against both
    generator equations directly.
    """
    if ra.ctx != rb.ctx:
        return []
    q = ra.ctx.p
    na, nb = ra.degree, rb.degree
    if na == 0 or nb == 0:
        return []
    pa, pa_inv, sizes_a = unipotent_jordan(ra.t, q)
    pb, pb_inv, sizes_b = unipotent_jordan(rb.t, q)
    sa = mat_mul(mat_mul(pa_inv, ra.s, q), pa, q)
    sb = mat_mul(mat_mul(pb_inv, rb.s, q), pb, q)
    stripes = _stripes(sizes_b, sizes_a)
    d = len(stripes)
    if d == 0:
        return []
    rng = np.random.default_rng(seed)
    total = na * nb
    n_init = min(total, d + 64)
    chosen = rng.choice(total, size=n_init, replace=False)
    pos_u = (chosen // na).astype(np.int64)
    pos_v = (chosen % na).astype(np.int64)

    r0s = np.array([s[0] for s in stripes])
    c0s = np.array([s[1] for s in stripes])
    lns = np.array([s[2] for s in stripes])

    sols: list[np.ndarray] = []
    for _round in range(d + 2):
        npos = pos_u.shape[0]
        g = np.zeros((npos, d), dtype=np.int64)
        for k in range(d):
            r0, c0, ln = int(r0s[k]), int(c0s[k]), int(lns[k])
            # (E_k sa)[u, v] contributes sa[c0 + (u - r0), v] when u is in the stripe rows
            off = pos_u - r0
            m1 = (off >= 0) & (off < ln)
            if m1.any():
                g[m1, k] += sa[c0 + off[m1], pos_v[m1]]
            # (sb E_k)[u, v] contributes sb[u, r0 + (v - c0)] when v is in the stripe cols
            off = pos_v - c0
            m2 = (off >= 0) & (off < ln)
            if m2.any():
                g[m2, k] -= sb[pos_u[m2], r0 + off[m2]]
        ker = kernel_basis(g % q, q)
        sols = []
        bad_u: list[np.ndarray] = []
        bad_v: list[np.ndarray] = []
        ok = True
        for col in ker.T:
            y = _assemble(stripes, col, nb, na, q)
            resid = (mat_mul(y, sa, q) - mat_mul(sb, y, q)) % q
            nz = np.argwhere(resid)
            if nz.size:
                ok = False
                take = nz[:64]
                bad_u.append(take[:, 0])
                bad_v.append(take[:, 1])
            else:
                sols.append(y)
        if ok:
            break
        pos_u = np.concatenate([pos_u] + bad_u)
        pos_v = np.concatenate([pos_v] + bad_v)
    else:
        raise AssertionError("hom_space sampling loop failed to stabilize")

    out = []
    for y in sols:
        x = mat_mul(mat_mul(pb, y, q), pa_inv, q)
        if (mat_mul(x, ra.s, q) != mat_mul(rb.s, x, q)).any() or (
            mat_mul(x, ra.t, q) != mat_mul(rb.t, x, q)
        ).any():
            raise AssertionError("hom_space produced a non-intertwiner")
        out.append(x)
    return out


def hom_dim(ra: MatRep, rb: MatRep, seed: int = 0) -> int:
    return len(hom_space(ra, rb, seed))


def hom_space_dense(ra: MatRep, rb: MatRep) -> list[np.ndarray]:
    """Reference implementation solving the full linear system directly.

    Quadratic memory in the degrees; used in tests to cross-check the
    stripe computation on small modules.
    """
    q = ra.ctx.p
    na, nb = ra.degree, rb.degree
    if na == 0 or nb == 0:
        return []
    n_unknown = na * nb  # X[u, v] at index u * na + v
    rows = []
    for a_g, b_g in ((ra.s, rb.s), (ra.t, rb.t)):
        block = np.zeros((nb * na, n_unknown), dtype=np.int64)
        for u in range(nb):
            for v in range(na):
                r = u * na + v
                # (X a_g)[u, v] = sum_k X[u, k] a_g[k, v]
                block[r, u * na : (u + 1) * na] += a_g[:, v]
                # (b_g X)[u, v] = sum_k b_g[u, k] X[k, v]
                block[r, v::na] -= b_g[u, :]
        rows.append(block % q)
    big = np.vstack(rows)
    ker = kernel_basis(big, q)
    return [col.reshape(nb, na) % q for col in ker.T]
