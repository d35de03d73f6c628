"""Dense univariate polynomial arithmetic and factorization over GF(q).

Polynomials are little-endian coefficient lists of ints in [0, q); the
zero polynomial is [].  q is always prime here, so q-th roots of
coefficients are the coefficients themselves, which keeps the
square-free decomposition in characteristic q simple.

Factorization is square-free decomposition, then distinct-degree
splitting, then Cantor-Zassenhaus equal-degree splitting (the trace-map
variant when q = 2).  The randomized part draws from an explicit
random.Random instance and the returned factor list is sorted, so runs
are reproducible for a fixed seed.
"""

import random

from ..errors import DomainError


def poly_normalize(c, q: int) -> list[int]:
    c = [int(x) % q for x in c]
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_deg(c) -> int:
    return len(c) - 1


def poly_is_zero(c) -> bool:
    return len(c) == 0


def poly_add(a, b, q: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % q
    return poly_normalize(out, q)


def poly_sub(a, b, q: int) -> list[int]:
    return poly_add(a, [(-x) % q for x in b], q)


def poly_scale(a, s: int, q: int) -> list[int]:
    return poly_normalize([x * s for x in a], q)


def poly_mul(a, b, q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return poly_normalize(out, q)


def poly_monic(a, q: int) -> list[int]:
    a = poly_normalize(a, q)
    if not a:
        return a
    inv = pow(a[-1], q - 2, q)
    return poly_scale(a, inv, q)


def poly_divmod(a, b, q: int) -> tuple[list[int], list[int]]:
    a = poly_normalize(a, q)
    b = poly_normalize(b, q)
    if not b:
        raise DomainError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    inv = pow(b[-1], q - 2, q)
    rem = a[:]
    quo = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        coef = (rem[k + len(b) - 1] * inv) % q
        if coef:
            quo[k] = coef
            for i, x in enumerate(b):
                rem[k + i] = (rem[k + i] - coef * x) % q
    return poly_normalize(quo, q), poly_normalize(rem, q)


def poly_mod(a, b, q: int) -> list[int]:
    return poly_divmod(a, b, q)[1]


def poly_gcd(a, b, q: int) -> list[int]:
    a = poly_normalize(a, q)
    b = poly_normalize(b, q)
    while b:
        a, b = b, poly_mod(a, b, q)
    return poly_monic(a, q)


def poly_lcm(a, b, q: int) -> list[int]:
    if not a or not b:
        return []
    g = poly_gcd(a, b, q)
    quo, rem = poly_divmod(poly_mul(a, b, q), g, q)
    assert not rem
    return poly_monic(quo, q)


def poly_deriv(a, q: int) -> list[int]:
    return poly_normalize([(i * a[i]) % q for i in range(1, len(a))], q)


def poly_pow_mod(base, e: int, mod, q: int) -> list[int]:
    out = [1]
    base = poly_mod(base, mod, q)
    while e:
        if e & 1:
            out = poly_mod(poly_mul(out, base, q), mod, q)
        base = poly_mod(poly_mul(base, base, q), mod, q)
        e >>= 1
    return out


def poly_eval(a, x: int, q: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % q
    return acc


def _qth_root(a, q: int) -> list[int]:
    # a(x) = b(x^q) over the prime field, so b picks every q-th coefficient
    return poly_normalize([a[i] for i in range(0, len(a), q)], q)


def squarefree_decomposition(f, q: int) -> list[tuple[list[int], int]]:
    """f = prod g_i^{m_i} with the g_i squarefree and pairwise coprime."""
    f = poly_monic(f, q)
    out = []
    if poly_deg(f) < 1:
        return out
    df = poly_deriv(f, q)
    if poly_is_zero(df):
        for g, m in squarefree_decomposition(_qth_root(f, q), q):
            out.append((g, m * q))
        return out
    c = poly_gcd(f, df, q)
    w = poly_divmod(f, c, q)[0]
    i = 1
    while poly_deg(w) > 0:
        y = poly_gcd(w, c, q)
        fac = poly_divmod(w, y, q)[0]
        if poly_deg(fac) > 0:
            out.append((fac, i))
        w = y
        c = poly_divmod(c, y, q)[0]
        i += 1
    if poly_deg(c) > 0:
        for g, m in squarefree_decomposition(_qth_root(c, q), q):
            out.append((g, m * q))
    return out


def distinct_degree(f, q: int) -> list[tuple[list[int], int]]:
    """Split a monic squarefree f into products of irreducibles by degree."""
    out = []
    h = [0, 1]  # x
    d = 0
    while poly_deg(f) > 2 * (d + 1) - 1 and poly_deg(f) > 0:
        d += 1
        h = poly_pow_mod(h, q, f, q)
        g = poly_gcd(poly_sub(h, [0, 1], q), f, q)
        if poly_deg(g) > 0:
            out.append((g, d))
            f = poly_divmod(f, g, q)[0]
            h = poly_mod(h, f, q)
    if poly_deg(f) > 0:
        out.append((f, poly_deg(f)))
    return out


def _random_poly(deg: int, q: int, rng: random.Random) -> list[int]:
    c = [rng.randrange(q) for _ in range(deg)] + [1]
    return poly_normalize(c, q)


def equal_degree(f, d: int, q: int, rng: random.Random) -> list[list[int]]:
    """Factor a monic squarefree product of degree-d irreducibles."""
    n = poly_deg(f)
    if n == d:
        return [f]
    while True:
        a = _random_poly(rng.randrange(1, n), q, rng)
        g = poly_gcd(a, f, q)
        if 0 < poly_deg(g) < n:
            break
        if q == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                t = poly_mod(poly_mul(t, t, q), f, q)
                acc = poly_add(acc, t, q)
            g = poly_gcd(acc, f, q)
        else:
            b = poly_pow_mod(a, (q**d - 1) // 2, f, q)
            g = poly_gcd(poly_sub(b, [1], q), f, q)
        if 0 < poly_deg(g) < n:
            break
    h = poly_divmod(f, g, q)[0]
    return equal_degree(g, d, q, rng) + equal_degree(h, d, q, rng)


def factor(f, q: int, seed: int = 0) -> tuple[int, list[tuple[list[int], int]]]:
    """Full factorization over GF(q): (leading coefficient, [(irred, mult)]).

    Deterministic for a fixed seed; the factor list is sorted by degree
    then coefficients, and the reconstruction is asserted.
    """
    f = poly_normalize(f, q)
    if poly_is_zero(f):
        raise DomainError("cannot factor the zero polynomial")
    lead = f[-1]
    rng = random.Random(seed)
    mon = poly_monic(f, q)
    found: list[tuple[list[int], int]] = []
    for g, m in squarefree_decomposition(mon, q):
        for part, d in distinct_degree(g, q):
            for irr in equal_degree(part, d, q, rng):
                found.append((poly_monic(irr, q), m))
    found.sort(key=lambda fm: (poly_deg(fm[0]), fm[0]))
    check = [lead]
    for g, m in found:
        for _ in range(m):
            check = poly_mul(check, g, q)
    assert check == f, "factorization reconstruction failed"
    return lead, found
