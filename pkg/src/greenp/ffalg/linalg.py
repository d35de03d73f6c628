"""Exact linear algebra over prime fields GF(q), built on the backend kernels.

Matrices are int64 numpy arrays with entries in [0, q).  Vectors are
columns: kernel_basis returns a matrix whose columns span the solution
space of M v = 0.  char_poly and min_poly return little-endian
coefficient lists (last entry 1, so length = degree + 1).
"""

import numpy as np

from ..errors import DomainError
from . import backend
from .polys import poly_lcm, poly_normalize

mat_mul = backend.mat_mul
rref = backend.rref


def asmat(a, q: int) -> np.ndarray:
    m = np.asarray(a, dtype=np.int64)
    if m.ndim != 2:
        raise DomainError(f"expected a matrix, got array of shape {m.shape}")
    return m % q


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def rank(a, q: int) -> int:
    return rref(a, q)[1]


def kernel_basis(a, q: int) -> np.ndarray:
    """Columns spanning ker(a) over GF(q); shape (ncols, nullity)."""
    a = asmat(a, q)
    red, rk, pivots = rref(a, q)
    n = a.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    out = np.zeros((n, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        out[f, k] = 1
        for row, pc in enumerate(pivots):
            out[pc, k] = (-red[row, f]) % q
    return out


def solve(a, b, q: int):
    """One solution x of a x = b (b may have several columns), or None."""
    a = asmat(a, q)
    b = asmat(b, q)
    n = a.shape[1]
    aug = np.hstack([a, b])
    red, rk, pivots = rref(aug, q)
    if any(pc >= n for pc in pivots):
        return None
    x = np.zeros((n, b.shape[1]), dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = red[row, n:]
    return x


def inverse(a, q: int) -> np.ndarray:
    a = asmat(a, q)
    n = a.shape[0]
    if a.shape[1] != n:
        raise DomainError("inverse of a non-square matrix")
    # [a | I] always has n pivots; a is invertible iff they all land in
    # the left block, in which case the right block is the inverse
    red, _, pivots = rref(np.hstack([a, identity(n)]), q)
    if any(pc >= n for pc in pivots):
        raise DomainError("matrix is singular over GF(q)")
    return red[:, n:]


def mat_pow(a, e: int, q: int) -> np.ndarray:
    a = asmat(a, q)
    n = a.shape[0]
    if e < 0:
        return mat_pow(inverse(a, q), -e, q)
    out = identity(n) % q
    base = a
    while e:
        if e & 1:
            out = mat_mul(out, base, q)
        base = mat_mul(base, base, q)
        e >>= 1
    return out


def kronecker(a, b, q: int) -> np.ndarray:
    """Kronecker product mod q; entry products stay below q^2 < 2^63."""
    return np.kron(asmat(a, q), asmat(b, q)) % q


def char_poly(a, q: int) -> list[int]:
    """Characteristic polynomial of a square matrix via Hessenberg form."""
    a = asmat(a, q)
    n = a.shape[0]
    if a.shape[1] != n:
        raise DomainError("char_poly of a non-square matrix")
    h = a.copy()
    # similarity reduction to upper Hessenberg form
    for c in range(n - 2):
        piv = -1
        for r in range(c + 1, n):
            if h[r, c] % q:
                piv = r
                break
        if piv < 0:
            continue
        if piv != c + 1:
            h[[c + 1, piv]] = h[[piv, c + 1]]
            h[:, [c + 1, piv]] = h[:, [piv, c + 1]]
        inv = pow(int(h[c + 1, c]), q - 2, q)
        for r in range(c + 2, n):
            f = (int(h[r, c]) * inv) % q
            if f:
                h[r] = (h[r] - f * h[c + 1]) % q
                h[:, c + 1] = (h[:, c + 1] + f * h[:, r]) % q
    # determinant recurrence on leading principal minors of xI - h
    polys = [[1]]
    for m in range(1, n + 1):
        d = int(h[m - 1, m - 1]) % q
        prev = polys[m - 1]
        cur = [0] * (m + 1)
        for k, co in enumerate(prev):
            cur[k + 1] = (cur[k + 1] + co) % q
            cur[k] = (cur[k] - d * co) % q
        prod = 1
        for k in range(1, m):
            prod = (prod * int(h[m - k, m - k - 1])) % q
            if prod == 0:
                break
            w = (int(h[m - 1 - k, m - 1]) * prod) % q
            if w:
                pk = polys[m - 1 - k]
                for t, co in enumerate(pk):
                    cur[t] = (cur[t] - w * co) % q
        polys.append([c % q for c in cur])
    return polys[n]


def min_poly(a, q: int) -> list[int]:
    """Minimal polynomial via Krylov spinning from standard basis seeds.

    The lcm of the cyclic minimal polynomials of seeds spanning F^n kills
    the whole space, so no final verification multiply is needed.
    """
    a = asmat(a, q)
    n = a.shape[0]
    if a.shape[1] != n:
        raise DomainError("min_poly of a non-square matrix")
    if n == 0:
        return [1]
    f = [1]
    # global echelon over all visited Krylov vectors: pivot -> reduced row
    glob: dict[int, np.ndarray] = {}

    def reduce_vec(v, table):
        v = v % q
        for pc in sorted(table):
            c = int(v[pc])
            if c:
                v = (v - c * table[pc][0]) % q
        return v

    for s in range(n):
        seed = np.zeros(n, dtype=np.int64)
        seed[s] = 1
        if int(np.count_nonzero(reduce_vec(seed, glob))) == 0:
            continue
        # local echelon with expression of each row in terms of iterates
        local: dict[int, tuple[np.ndarray, list[int]]] = {}
        v = seed
        k = 0
        while True:
            w = v % q
            rec = [0] * (k + 1)
            rec[k] = 1
            for pc in sorted(local):
                c = int(w[pc])
                if c:
                    row, rrec = local[pc]
                    w = (w - c * row) % q
                    for t, co in enumerate(rrec):
                        rec[t] = (rec[t] - c * co) % q
            nz = np.nonzero(w)[0]
            if nz.size == 0:
                # relation sum rec[t] * A^t seed = 0 with rec[k] = 1
                f = poly_lcm(f, poly_normalize(rec, q), q)
                break
            pc = int(nz[0])
            inv = pow(int(w[pc]), q - 2, q)
            w = (w * inv) % q
            rec = [(co * inv) % q for co in rec]
            local[pc] = (w, rec)
            gw = reduce_vec(w, glob)
            gnz = np.nonzero(gw)[0]
            if gnz.size:
                gpc = int(gnz[0])
                ginv = pow(int(gw[gpc]), q - 2, q)
                glob[gpc] = ((gw * ginv) % q,)
            v = mat_mul(a, v.reshape(n, 1), q).reshape(n)
            k += 1
        if len(f) == n + 1:
            break
    return f
