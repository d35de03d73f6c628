"""Exact linear algebra and polynomial splitting over the rationals.

Matrices are lists of lists of Fraction; no floats anywhere.  The
polynomial side only certifies what it can do exactly: rational roots,
quadratic discriminants, and square-free splitting.  Anything beyond
that is reported as undecided rather than guessed.
"""

from fractions import Fraction
from math import gcd, isqrt

from ..errors import DomainError


def fmat(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def frref(a) -> tuple[list[list[Fraction]], int, tuple[int, ...]]:
    m = fmat(a)
    if not m or not m[0]:
        return m, 0, ()
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, r, tuple(pivots)


def fkernel(a) -> list[list[Fraction]]:
    """Basis vectors of ker(a) over Q, one list per basis vector."""
    m = fmat(a)
    if not m:
        return []
    red, rk, pivots = frref(m)
    cols = len(m[0])
    pivset = set(pivots)
    out = []
    for f in range(cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -red[row][f]
        out.append(v)
    return out


def int_det(a) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss."""
    m = [[int(x) for x in row] for row in a]
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise DomainError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def fmat_mul(a, b) -> list[list[Fraction]]:
    if not a:
        return []
    inner = len(a[0])
    bcols = len(b[0]) if b else 0
    return [
        [sum((row[k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(bcols)]
        for row in a
    ]


def fmin_poly(a) -> list[Fraction]:
    """Minimal polynomial over Q, little-endian, monic."""
    n = len(a)
    if n == 0:
        return [Fraction(1)]
    m = fmat(a)
    f = [Fraction(1)]
    glob: dict[int, list[Fraction]] = {}

    def reduce_vec(v, table):
        v = v[:]
        for pc in sorted(table):
            c = v[pc]
            if c != 0:
                row = table[pc]
                v = [x - c * y for x, y in zip(v, row)]
        return v

    for s in range(n):
        seed = [Fraction(0)] * n
        seed[s] = Fraction(1)
        if all(x == 0 for x in reduce_vec(seed, glob)):
            continue
        local: dict[int, tuple[list[Fraction], list[Fraction]]] = {}
        v = seed
        k = 0
        while True:
            w = v[:]
            rec = [Fraction(0)] * (k + 1)
            rec[k] = Fraction(1)
            for pc in sorted(local):
                c = w[pc]
                if c != 0:
                    row, rrec = local[pc]
                    w = [x - c * y for x, y in zip(w, row)]
                    for t, co in enumerate(rrec):
                        rec[t] -= c * co
            pc = next((i for i, x in enumerate(w) if x != 0), None)
            if pc is None:
                f = _fpoly_lcm(f, rec)
                break
            inv = 1 / w[pc]
            w = [x * inv for x in w]
            rec = [co * inv for co in rec]
            local[pc] = (w, rec)
            gw = reduce_vec(w, glob)
            gpc = next((i for i, x in enumerate(gw) if x != 0), None)
            if gpc is not None:
                ginv = 1 / gw[gpc]
                glob[gpc] = [x * ginv for x in gw]
            v = [sum((m[i][t] * v[t] for t in range(n)), Fraction(0)) for i in range(n)]
            k += 1
        if len(f) == n + 1:
            break
    return f


def _fpoly_trim(a) -> list[Fraction]:
    a = [Fraction(x) for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def fpoly_mul(a, b) -> list[Fraction]:
    a, b = _fpoly_trim(a), _fpoly_trim(b)
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def fpoly_divmod(a, b) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _fpoly_trim(a), _fpoly_trim(b)
    if not b:
        raise DomainError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    rem = a[:]
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coef = rem[k + len(b) - 1] * inv
        if coef != 0:
            quo[k] = coef
            for i, x in enumerate(b):
                rem[k + i] -= coef * x
    return _fpoly_trim(quo), _fpoly_trim(rem)


def fpoly_gcd(a, b) -> list[Fraction]:
    a, b = _fpoly_trim(a), _fpoly_trim(b)
    while b:
        a, b = b, fpoly_divmod(a, b)[1]
    if a:
        inv = 1 / a[-1]
        a = [x * inv for x in a]
    return a


def _fpoly_lcm(a, b) -> list[Fraction]:
    if not a or not b:
        return []
    g = fpoly_gcd(a, b)
    quo, rem = fpoly_divmod(fpoly_mul(a, b), g)
    assert not rem
    inv = 1 / quo[-1]
    return [x * inv for x in quo]


def fpoly_eval(a, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _divisors(n: int, cap: int = 10**6) -> list[int] | None:
    """All positive divisors of |n|, or None when factoring would exceed cap."""
    n = abs(n)
    if n == 0:
        return None
    fac = {}
    d = 2
    while d * d <= n:
        if d > cap:
            return None
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    divs = [1]
    for pr, e in fac.items():
        divs = [dv * pr**k for dv in divs for k in range(e + 1)]
    return sorted(divs)


def _rational_root(f) -> tuple[Fraction | None, bool]:
    """(some rational root of f or None, certified flag).

    certified is False only when the divisor enumeration overflowed its
    cap, i.e. absence of a root could not be established."""
    den = 1
    for c in f:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    if ints[0] == 0:
        return Fraction(0), True
    p_divs = _divisors(ints[0])
    q_divs = _divisors(ints[-1])
    if p_divs is None or q_divs is None:
        return None, False
    for pn in p_divs:
        for qd in q_divs:
            for sgn in (1, -1):
                cand = Fraction(sgn * pn, qd)
                if fpoly_eval(f, cand) == 0:
                    return cand, True
    return None, True


def rational_factor(a) -> tuple[list[tuple[list[Fraction], int]], bool]:
    """Split a rational polynomial as far as exact methods certify.

    Returns (factors, decided): factors is a list of (monic factor,
    multiplicity) whose product is the monic normalization of the input;
    decided is True when every factor is certified irreducible over Q:
    degree one, degree two with non-square discriminant, or degree three
    with certified no rational root (a reducible cubic would have a
    linear factor).  Factors of degree >= 4 are returned whole and flip
    decided to False.
    """
    a = _fpoly_trim(a)
    if not a:
        raise DomainError("cannot factor the zero polynomial")
    inv = 1 / a[-1]
    a = [x * inv for x in a]
    # square-free split over Q (Yun)
    sqfree: list[tuple[list[Fraction], int]] = []
    d = fpoly_gcd(a, _fpoly_trim([i * a[i] for i in range(1, len(a))]))
    w = fpoly_divmod(a, d)[0]
    i = 1
    while len(w) > 1:
        y = fpoly_gcd(w, d)
        fac = fpoly_divmod(w, y)[0]
        if len(fac) > 1:
            sqfree.append((fac, i))
        w = y
        d = fpoly_divmod(d, y)[0]
        i += 1
    decided = True
    out: list[tuple[list[Fraction], int]] = []
    for g, m in sqfree:
        rest = g
        rootless_certified = True
        while len(rest) > 2:
            root, certified = _rational_root(rest)
            if root is None:
                rootless_certified = certified
                break
            out.append(([-root, Fraction(1)], m))
            rest = fpoly_divmod(rest, [-root, Fraction(1)])[0]
        if len(rest) == 2:
            out.append((rest, m))
        elif len(rest) == 3:
            # quadratic: irreducible iff the discriminant is not a square
            b, c0 = rest[1], rest[0]
            disc = b * b - 4 * c0
            num, dnm = disc.numerator, disc.denominator
            if num >= 0 and isqrt(num) ** 2 == num and isqrt(dnm) ** 2 == dnm:
                s = Fraction(isqrt(num), isqrt(dnm))
                r1 = (-b + s) / 2
                r2 = (-b - s) / 2
                out.append(([-r1, Fraction(1)], m))
                out.append(([-r2, Fraction(1)], m))
            else:
                out.append((rest, m))
        elif len(rest) == 4 and rootless_certified:
            out.append((rest, m))
        elif len(rest) > 3:
            out.append((rest, m))
            decided = False
    return out, decided
