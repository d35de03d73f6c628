"""Tensor growth rates as sine quotients."""

import math
import random

import pytest

from greenp import (
    DomainError,
    GammaValue,
    PrimeContext,
    StableClass,
    StableElement,
    canonicalize,
    dual,
    gamma_class,
    gamma_cp,
    gamma_element,
    restriction_jordan_stable,
    syzygy,
)

PRIMES_WIDE = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
]

PHI = (1 + math.sqrt(5)) / 2


def test_gamma_cp_examples():
    ctx = PrimeContext(5)
    assert gamma_cp(ctx, 1).value() == pytest.approx(1.0, abs=1e-15)
    assert gamma_cp(ctx, 2).value() == pytest.approx(PHI, abs=1e-12)
    assert gamma_cp(ctx, 4).value() == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(DomainError):
        gamma_cp(ctx, 5)  # free block, gamma 0 by convention
    with pytest.raises(DomainError):
        gamma_cp(ctx, 0)
    with pytest.raises(DomainError):
        gamma_cp(ctx, 6)


@pytest.mark.parametrize("p", PRIMES_WIDE)
def test_gamma_cp_trig_identity(p):
    # gamma(J_k) + gamma(J_{p-k}) relates consecutive sine quotients:
    # sin(k a) + sin((p-k) a) with a = pi/p has the closed form below
    ctx = PrimeContext(p)
    a = math.pi / p
    for k in range(1, p):
        lhs = gamma_cp(ctx, k).value()
        rhs = math.sin(k * a) / math.sin(a)
        assert abs(lhs - rhs) < 1e-9
        # the flip identity is exact in exact arithmetic
        assert gamma_cp(ctx, k) == gamma_cp(ctx, p - k)
        assert abs(gamma_cp(ctx, k).value() - gamma_cp(ctx, p - k).value()) < 1e-9
    # product formula: gamma(J_2) gamma(J_k) = gamma(J_{k-1}) + gamma(J_{k+1})
    for k in range(2, p - 1):
        lhs = gamma_cp(ctx, 2).value() * gamma_cp(ctx, k).value()
        rhs = gamma_cp(ctx, k - 1).value() + gamma_cp(ctx, k + 1).value()
        assert abs(lhs - rhs) < 1e-9


def test_gamma_value_identification():
    a = GammaValue(5, 2)
    b = GammaValue(5, 3)
    assert a == b
    assert hash(a) == hash(b)
    assert a != GammaValue(5, 1)
    assert GammaValue(5, 1) != GammaValue(7, 1)
    assert len({GammaValue(5, k) for k in range(1, 5)}) == 2
    with pytest.raises(DomainError):
        GammaValue(5, 0)
    with pytest.raises(DomainError):
        GammaValue(5, 5)


def test_restriction_jordan_stable_examples():
    assert restriction_jordan_stable(PrimeContext(5), 0) == (1,)
    assert restriction_jordan_stable(PrimeContext(5), 1) == (3,)
    assert restriction_jordan_stable(PrimeContext(7), 2) == (3,)
    assert restriction_jordan_stable(PrimeContext(7), 3) == (3,)
    with pytest.raises(DomainError):
        restriction_jordan_stable(PrimeContext(5), 4)


@pytest.mark.parametrize("p", PRIMES_WIDE)
def test_gamma_class_matches_restriction_block(p):
    ctx = PrimeContext(p)
    for j in range(p - 1):
        (k,) = restriction_jordan_stable(ctx, j)
        assert gamma_class(ctx, StableClass(0, j)) == gamma_cp(ctx, k)


def test_gamma_class_examples():
    ctx = PrimeContext(5)
    for i in range(4):
        c = canonicalize(ctx, i, 0)
        assert gamma_class(ctx, c).value() == pytest.approx(1.0, abs=1e-12)
    assert gamma_class(ctx, StableClass(0, 1)).value() == pytest.approx(PHI, abs=1e-12)
    assert gamma_class(ctx, StableClass(0, 3)).value() == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_gamma_syzygy_invariance(p):
    ctx = PrimeContext(p)
    for j in range(p - 1):
        base = gamma_class(ctx, StableClass(0, j))
        for n in range(-ctx.period, ctx.period + 1):
            assert gamma_class(ctx, canonicalize(ctx, n, j)) == base


def test_gamma_element_additive_and_golden():
    ctx = PrimeContext(5)
    d1 = StableElement.basis(ctx, 0, 1)
    prod = d1 * d1  # D0 + D2
    # gamma is multiplicative: phi^2 = 1 + phi
    assert gamma_element(prod) == pytest.approx(PHI * PHI, abs=1e-9)
    assert gamma_element(prod) == pytest.approx(1 + PHI, abs=1e-9)
    assert gamma_element(d1 + prod) == pytest.approx(1 + PHI + PHI, abs=1e-9)
    assert gamma_element(StableElement.zero(ctx)) == 0.0


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_gamma_element_respects_product_and_dual(p):
    ctx = PrimeContext(p)
    rng = random.Random(p)
    basis = [
        StableElement.basis(ctx, s, j)
        for s in range(p - 1)
        for j in range(p - 1)
    ]
    for _ in range(100):
        a = rng.choice(basis)
        b = rng.choice(basis)
        e = a + b
        assert gamma_element(dual(e)) == pytest.approx(gamma_element(e), abs=1e-9)
        assert gamma_element(syzygy(e, rng.randrange(-5, 6))) == pytest.approx(
            gamma_element(e), abs=1e-9
        )
        assert gamma_element(a * b) == pytest.approx(
            gamma_element(a) * gamma_element(b), rel=1e-9
        )


def test_gamma_element_rejects_virtual_elements():
    ctx = PrimeContext(5)
    e = -1 * StableElement.basis(ctx, 0, 1)
    with pytest.raises(DomainError):
        gamma_element(e)
