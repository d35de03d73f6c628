"""Pure numpy backend for the two hot kernels: mat_mul and rref mod q.

Entries live in int64 and reduction mod q is delayed: a product only
needs reducing every `chunk` accumulations with chunk = 2^62 / (q-1)^2,
and row elimination only when the worst-case growth bound would
overflow.  For the small prime fields used here that means one final
reduction per call.
"""

import numpy as np


def _chunk(q: int) -> int:
    return max(1, (2**62) // max(1, (q - 1) ** 2))


def mat_mul(a, b, q: int):
    """(a @ b) mod q for int64 matrices with entries in [0, q)."""
    a = np.ascontiguousarray(a, dtype=np.int64)
    b = np.ascontiguousarray(b, dtype=np.int64)
    inner = a.shape[1]
    if inner == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    chunk = _chunk(q)
    if inner <= chunk:
        return (a @ b) % q
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, inner, chunk):
        out = (out + a[:, s : s + chunk] @ b[s : s + chunk, :]) % q
    return out


def rref(a, q: int):
    """Reduced row echelon form mod q; returns (R, rank, pivot columns)."""
    m = np.array(a, dtype=np.int64) % q
    rows, cols = m.shape
    if rows == 0 or cols == 0:
        return m, 0, ()
    # growth per elimination is < (q-1)^2; reduce eagerly only if the
    # worst case over all pivots could overflow int64
    tight = (min(rows, cols) + 1) * (q - 1) ** 2 + q >= 2**62
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = m[r:, c] % q
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] %= q
        lead = int(m[r, c])
        if lead != 1:
            m[r] = (m[r] * pow(lead, q - 2, q)) % q
        coef = m[:, c] % q
        coef[r] = 0
        mask = coef != 0
        if mask.any():
            m[mask] -= np.outer(coef[mask], m[r])
            if tight:
                m[mask] %= q
        pivots.append(c)
        r += 1
    return m % q, r, tuple(pivots)
