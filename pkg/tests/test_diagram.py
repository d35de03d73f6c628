"""Layer rectangle combinatorics: bounds, head windows, Specht factors."""

from collections import Counter

import pytest

from greenp import (
    DomainError,
    PrimeContext,
    layer_ends,
    r_set,
    rect_bounds,
    rect_profile,
    s_factors,
)

PRIMES_SMALL = [3, 5, 7, 11, 13]
PRIMES_MID = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
PRIMES_WIDE = PRIMES_MID + [53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


def test_prime_context_constants():
    ctx = PrimeContext(5)
    assert ctx.period == 8
    assert ctx.n_simples == 4


@pytest.mark.parametrize("bad", [2, 4, 6, 9, 15, 1, 0, -3])
def test_rejected_primes(bad):
    with pytest.raises(DomainError):
        PrimeContext(bad)


def test_non_integer_prime_rejected():
    with pytest.raises(DomainError):
        PrimeContext("5")


@pytest.mark.parametrize(
    "p,i,j,expected",
    [
        (5, 0, 2, (2, 2)),
        (5, 3, 3, (0, 1)),
        (5, 1, 3, (2, 3)),
    ],
)
def test_rect_bounds_examples(p, i, j, expected):
    assert rect_bounds(PrimeContext(p), i, j) == expected


@pytest.mark.parametrize(
    "p,i,j,expected",
    [
        (5, 1, 1, (0, 2)),
        (5, 3, 3, (0, 0)),
        (7, 2, 2, (0, 4)),
    ],
)
def test_layer_ends_examples(p, i, j, expected):
    assert layer_ends(PrimeContext(p), i, j) == expected


def test_rect_profile_collects_all_four_bounds():
    ctx = PrimeContext(5)
    pr = rect_profile(ctx, 1, 1)
    assert (pr.a, pr.b, pr.l, pr.r) == (0, 2, 0, 2)
    assert (pr.i, pr.j) == (1, 1)


def test_r_set_examples():
    ctx = PrimeContext(5)
    assert r_set(ctx, 1, 1) == (0, 2)
    # row zero is the identity row: D_0 (x) D_j = D_j stably
    for p in PRIMES_SMALL:
        ctx = PrimeContext(p)
        for j in range(p - 1):
            assert r_set(ctx, 0, j) == (j,)


@pytest.mark.parametrize("p", PRIMES_WIDE)
def test_r_set_symmetry(p):
    ctx = PrimeContext(p)
    for i in range(p - 1):
        for j in range(i, p - 1):
            assert r_set(ctx, i, j) == r_set(ctx, j, i)


@pytest.mark.parametrize("p", PRIMES_MID)
def test_r_set_parity_and_window(p):
    ctx = PrimeContext(p)
    for i in range(p - 1):
        for j in range(p - 1):
            ts = r_set(ctx, i, j)
            assert ts  # never empty
            for t in ts:
                assert (t - i - j) % 2 == 0
                assert 0 <= t <= p - 2
            assert ts == tuple(range(ts[0], ts[-1] + 1, 2))


@pytest.mark.parametrize("p", PRIMES_MID)
def test_r_set_mirror(p):
    ctx = PrimeContext(p)
    for i in range(p - 1):
        for j in range(p - 1):
            assert r_set(ctx, p - 2 - i, p - 2 - j) == r_set(ctx, i, j)


@pytest.mark.parametrize(
    "p,i,expected",
    [
        (5, 0, (0,)),
        (5, 2, (1, 2)),
        (5, 4, (3,)),
        (3, 1, (0, 1)),
        (7, 6, (5,)),
    ],
)
def test_s_factors_examples(p, i, expected):
    assert s_factors(PrimeContext(p), i) == expected


@pytest.mark.parametrize("p", PRIMES_MID)
def test_two_row_specht_filtration_identity(p):
    # consecutive rectangle rows carry the same factors as the Specht
    # modules S_{i-j+2q}, S_{i-j+2q+1} over the admissible window of q
    ctx = PrimeContext(p)
    for j in range(p - 1):
        for i in range(p - 1):
            a0, b0 = rect_bounds(ctx, i, j)
            a1, b1 = rect_bounds(ctx, i + 1, j)
            left = Counter(range(a0, b0 + 1)) + Counter(range(a1, b1 + 1))
            right: Counter = Counter()
            for q in range(max(0, j - i), min(p - i - 2, j) + 1):
                right.update(s_factors(ctx, i - j + 2 * q))
                right.update(s_factors(ctx, i - j + 2 * q + 1))
            assert left == right, (p, i, j)


def test_out_of_range_indices():
    ctx = PrimeContext(5)
    with pytest.raises(DomainError):
        rect_bounds(ctx, 5, 0)  # rows stop at p-1
    with pytest.raises(DomainError):
        rect_bounds(ctx, 0, 4)  # simples stop at p-2
    with pytest.raises(DomainError):
        layer_ends(ctx, 4, 0)  # head windows stop at p-2
    with pytest.raises(DomainError):
        r_set(ctx, -1, 0)
    with pytest.raises(DomainError):
        r_set(ctx, 0, -1)
    with pytest.raises(DomainError):
        s_factors(ctx, 5)
    with pytest.raises(DomainError):
        s_factors(ctx, -1)


def test_rect_bounds_allows_last_row():
    # the i = p-1 row exists for the filtration identity only
    ctx = PrimeContext(5)
    assert rect_bounds(ctx, 4, 0) == (3, 3)
