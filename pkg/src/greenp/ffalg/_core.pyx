# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the two hot kernels: mat_mul and rref mod q.

Same contract as the pure numpy backend, with scalar loops and the same
delayed-reduction strategy; the win over numpy is the absence of
temporary arrays and of full-matrix reduction passes.
"""

import numpy as np


cdef inline long long _nonneg(long long x, long long q) nogil:
    x = x % q
    if x < 0:
        x += q
    return x


cdef long long _modpow(long long base, long long e, long long q) nogil:
    cdef long long acc = 1 % q
    base = _nonneg(base, q)
    while e > 0:
        if e & 1:
            acc = (acc * base) % q
        base = (base * base) % q
        e >>= 1
    return acc


def mat_mul(a, b, long long q):
    """(a @ b) mod q for int64 matrices with entries in [0, q)."""
    cdef long long[:, ::1] am = np.ascontiguousarray(a, dtype=np.int64)
    cdef long long[:, ::1] bm = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t n = am.shape[0], inner = am.shape[1], m = bm.shape[1]
    out = np.zeros((n, m), dtype=np.int64)
    if n == 0 or inner == 0 or m == 0:
        return out
    cdef long long[:, ::1] om = out
    cdef long long chunk = max(1, (2**62) // max(1, (q - 1) * (q - 1)))
    cdef Py_ssize_t i, j, k
    cdef long long acc, aik
    with nogil:
        for i in range(n):
            for k in range(inner):
                aik = am[i, k]
                if aik == 0:
                    continue
                for j in range(m):
                    om[i, j] += aik * bm[k, j]
                if (k + 1) % chunk == 0:
                    for j in range(m):
                        om[i, j] %= q
            for j in range(m):
                om[i, j] = _nonneg(om[i, j], q)
    return out


def rref(a, long long q):
    """Reduced row echelon form mod q; returns (R, rank, pivot columns)."""
    m = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % q)
    cdef long long[:, ::1] mm = m
    cdef Py_ssize_t rows = mm.shape[0], cols = mm.shape[1]
    if rows == 0 or cols == 0:
        return m, 0, ()
    cdef bint tight = (min(rows, cols) + 1) * (q - 1) * (q - 1) + q >= 2**62
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long v, inv, f, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if _nonneg(mm[i, c], q) != 0:
                piv = i
                break
        if piv < 0:
            continue
        with nogil:
            if piv != r:
                for j in range(cols):
                    tmp = mm[r, j]
                    mm[r, j] = mm[piv, j]
                    mm[piv, j] = tmp
            for j in range(cols):
                mm[r, j] = _nonneg(mm[r, j], q)
            v = mm[r, c]
            if v != 1:
                inv = _modpow(v, q - 2, q)
                for j in range(cols):
                    mm[r, j] = (mm[r, j] * inv) % q
            for i in range(rows):
                if i == r:
                    continue
                f = _nonneg(mm[i, c], q)
                if f == 0:
                    continue
                for j in range(cols):
                    mm[i, j] -= f * mm[r, j]
                if tight:
                    for j in range(cols):
                        mm[i, j] = _nonneg(mm[i, j], q)
        pivots.append(c)
        r += 1
    cdef Py_ssize_t ii, jj
    with nogil:
        for ii in range(rows):
            for jj in range(cols):
                mm[ii, jj] = _nonneg(mm[ii, jj], q)
    return m, r, tuple(pivots)
