"""Ring arithmetic on stable classes: products, syzygies, duals, census."""

import random
from collections import Counter

import pytest

from greenp import (
    DomainError,
    PrimeContext,
    StableClass,
    StableElement,
    ar_quiver,
    canonicalize,
    census,
    dim_class,
    dim_projective,
    dim_simple,
    dual,
    ext_dim,
    loewy,
    min_resolution_term,
    r_set,
    syzygy,
    tensor,
)

PRIMES_SMALL = [3, 5, 7, 11, 13]
PRIMES_MID = [3, 5, 7, 11, 13, 17, 19, 23]


def _random_element(ctx, rng, nterms=4, bound=3):
    terms = []
    for _ in range(nterms):
        shift = rng.randrange(-2 * ctx.period, 2 * ctx.period)
        j = rng.randrange(ctx.p - 1)
        terms.append((canonicalize(ctx, shift, j), rng.randint(-bound, bound)))
    return StableElement.make(ctx, terms)


@pytest.mark.parametrize(
    "p,shift,j,expected",
    [
        (5, 4, 0, (0, 3)),
        (5, 8, 1, (0, 1)),
        (5, -4, 1, (0, 2)),
        (5, 0, 0, (0, 0)),
        (5, 3, 2, (3, 2)),
        (3, 2, 0, (0, 1)),
    ],
)
def test_canonicalize_examples(p, shift, j, expected):
    assert canonicalize(PrimeContext(p), shift, j) == StableClass(*expected)


@pytest.mark.parametrize("p", PRIMES_SMALL)
def test_canonicalize_idempotent_and_periodic(p):
    ctx = PrimeContext(p)
    for shift in range(-2 * ctx.period, 2 * ctx.period):
        for j in range(p - 1):
            c = canonicalize(ctx, shift, j)
            assert 0 <= c.shift <= p - 2
            assert canonicalize(ctx, c.shift, c.j) == c
            assert canonicalize(ctx, shift + ctx.period, j) == c
            # half-period flip
            assert canonicalize(ctx, shift + p - 1, j) == canonicalize(
                ctx, shift, p - 2 - j
            )


def test_tensor_examples():
    ctx = PrimeContext(5)
    d1 = StableElement.basis(ctx, 0, 1)
    prod = d1 * d1
    assert prod.terms() == (
        (StableClass(0, 0), 1),
        (StableClass(0, 2), 1),
    )
    # shifts add and cancel
    a = StableElement.basis(ctx, 1, 1)
    b = StableElement.basis(ctx, -1, 1)
    assert (a * b).terms() == prod.terms()


@pytest.mark.parametrize("p", PRIMES_SMALL)
def test_tensor_unit(p):
    ctx = PrimeContext(p)
    one = StableElement.basis(ctx, 0, 0)
    for shift in range(p - 1):
        for j in range(p - 1):
            e = StableElement.basis(ctx, shift, j)
            assert (one * e).terms() == e.terms()
            assert (e * one).terms() == e.terms()


@pytest.mark.parametrize("p", PRIMES_MID)
def test_tensor_commutative(p):
    ctx = PrimeContext(p)
    rng = random.Random(p)
    for _ in range(20):
        a = _random_element(ctx, rng)
        b = _random_element(ctx, rng)
        assert (a * b).terms() == (b * a).terms()


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23])
def test_tensor_associative(p):
    ctx = PrimeContext(p)
    rng = random.Random(100 + p)
    for _ in range(8):
        a = _random_element(ctx, rng, nterms=2)
        b = _random_element(ctx, rng, nterms=2)
        c = _random_element(ctx, rng, nterms=2)
        assert ((a * b) * c).terms() == (a * (b * c)).terms()


@pytest.mark.parametrize("p", PRIMES_SMALL)
def test_tensor_basis_associative_exhaustive(p):
    # associativity on simple generators, all triples
    ctx = PrimeContext(p)
    basis = [StableElement.basis(ctx, 0, j) for j in range(p - 1)]
    for a in basis:
        for b in basis:
            ab = a * b
            for c in basis:
                assert ((ab) * c).terms() == (a * (b * c)).terms()


def test_mixed_primes_rejected():
    a = StableElement.basis(PrimeContext(5), 0, 1)
    b = StableElement.basis(PrimeContext(7), 0, 1)
    with pytest.raises(DomainError):
        tensor(a, b)


def test_integer_scaling_and_additive_structure():
    ctx = PrimeContext(5)
    d1 = StableElement.basis(ctx, 0, 1)
    d2 = StableElement.basis(ctx, 0, 2)
    e = 2 * d1 + d2 - d1
    assert e.terms() == ((StableClass(0, 1), 1), (StableClass(0, 2), 1))
    assert (e - e).is_zero()
    assert (-e + e).is_zero()
    assert (0 * e).is_zero()
    assert (d1 * 3).terms() == (3 * d1).terms()
    # distributivity
    f = StableElement.basis(ctx, 2, 3)
    assert ((d1 + d2) * f).terms() == (d1 * f + d2 * f).terms()


def test_syzygy_examples_and_inverse():
    ctx = PrimeContext(5)
    d1 = StableElement.basis(ctx, 0, 1)
    assert syzygy(d1, 4).terms() == ((StableClass(0, 2), 1),)
    assert syzygy(d1, 8).terms() == d1.terms()
    assert syzygy(syzygy(d1, 3), -3).terms() == d1.terms()


@pytest.mark.parametrize("p", PRIMES_SMALL)
def test_dual_is_involution_and_twists_syzygy(p):
    ctx = PrimeContext(p)
    rng = random.Random(17 * p)
    for _ in range(100):
        e = _random_element(ctx, rng)
        assert dual(dual(e)).terms() == e.terms()
        n = rng.randrange(-6, 7)
        assert dual(syzygy(e, n)).terms() == syzygy(dual(e), -n).terms()


def test_dual_example():
    ctx = PrimeContext(5)
    assert dual(StableElement.basis(ctx, 1, 0)).terms() == (
        (StableClass(3, 3), 1),
    )


def test_loewy_examples():
    ctx = PrimeContext(5)
    lw = loewy(ctx, StableClass(1, 0))
    assert not lw.simple
    assert lw.head == (1,)
    assert lw.socle == (0,)
    lw = loewy(ctx, StableClass(2, 1))
    assert lw.head == (1, 3)
    assert lw.socle == (0, 2)
    lw = loewy(ctx, StableClass(0, 3))
    assert lw.simple and lw.head == (3,) and lw.socle == ()


@pytest.mark.parametrize("p", PRIMES_SMALL)
def test_loewy_socle_chains_to_previous_head(p):
    ctx = PrimeContext(p)
    for j in range(p - 1):
        for i in range(1, p - 1):
            assert loewy(ctx, StableClass(i, j)).socle == r_set(ctx, i - 1, j)
            assert loewy(ctx, StableClass(i, j)).head == r_set(ctx, i, j)


def test_loewy_rejects_non_canonical():
    ctx = PrimeContext(5)
    with pytest.raises(DomainError):
        loewy(ctx, StableClass(4, 0))
    with pytest.raises(DomainError):
        loewy(ctx, StableClass(-1, 0))


def test_dimension_examples():
    ctx5 = PrimeContext(5)
    assert [dim_simple(ctx5, j) for j in range(4)] == [1, 3, 3, 1]
    assert dim_projective(ctx5, 0) == 5
    assert dim_projective(PrimeContext(3), 0) == 3
    assert dim_class(ctx5, StableClass(1, 0)) == 4
    assert dim_class(ctx5, StableClass(0, 2)) == 3


@pytest.mark.parametrize("p", PRIMES_SMALL)
def test_dim_class_mod_p(p):
    # stable classes alternate sign mod p along the syzygy chain
    ctx = PrimeContext(p)
    for j in range(p - 1):
        for k in range(p - 1):
            got = dim_class(ctx, StableClass(k, j)) % p
            want = ((-1) ** k * dim_simple(ctx, j)) % p
            assert got == want
    for t in range(p - 1):
        assert dim_projective(ctx, t) % p == 0


def test_min_resolution_term_examples():
    ctx = PrimeContext(5)
    # degree zero covers the module itself
    for j in range(4):
        assert min_resolution_term(ctx, StableClass(0, j), 0) == (j,)
    assert min_resolution_term(ctx, StableClass(0, 1), 1) == (0, 2)
    # full period returns to the start
    for j in range(4):
        assert min_resolution_term(ctx, StableClass(0, j), ctx.period) == (j,)
    with pytest.raises(DomainError):
        min_resolution_term(ctx, StableClass(0, 0), -1)


@pytest.mark.parametrize("p", PRIMES_SMALL)
def test_resolution_terms_follow_syzygy_heads(p):
    ctx = PrimeContext(p)
    for j in range(p - 1):
        c = StableClass(0, j)
        for n in range(2 * ctx.period + 1):
            cn = canonicalize(ctx, n, j)
            assert min_resolution_term(ctx, c, n) == loewy(ctx, cn).head


@pytest.mark.parametrize("p", PRIMES_SMALL)
def test_period_is_exactly_2p_minus_2(p):
    ctx = PrimeContext(p)
    for j in range(p - 1):
        c = canonicalize(ctx, 0, j)
        assert canonicalize(ctx, ctx.period, j) == c
        for n in range(1, ctx.period):
            shifted = canonicalize(ctx, n, j)
            if shifted != c:
                continue
            # the only early return happens at the half period for the
            # self-conjugate column, never for every j at once
            assert n == p - 1 and j == p - 2 - j
    # no even number below 2p-2 is a period for all j at once
    for n in range(2, ctx.period, 2):
        assert any(canonicalize(ctx, n, j) != StableClass(0, j) for j in range(p - 1))


def test_ext_dim_examples():
    ctx = PrimeContext(5)
    for lam in range(4):
        for mu in range(4):
            assert ext_dim(ctx, 0, lam, mu) == int(lam == mu)
    # degree one sees the arrows of the path graph
    for lam in range(4):
        for mu in range(4):
            assert ext_dim(ctx, 1, lam, mu) == int(abs(lam - mu) == 1)
    # labels outside the principal block only meet themselves in degree 0
    assert ext_dim(ctx, 0, "outside", "outside") == 1
    assert ext_dim(ctx, 0, "outside", 1) == 0
    assert ext_dim(ctx, 3, "outside", "outside") == 0
    with pytest.raises(DomainError):
        ext_dim(ctx, -1, 0, 0)
    with pytest.raises(DomainError):
        ext_dim(ctx, 0, 4, 0)


@pytest.mark.parametrize("p", PRIMES_MID)
def test_ext_periodicity(p):
    ctx = PrimeContext(p)
    for lam in range(p - 1):
        for mu in range(p - 1):
            for n in range(1, ctx.period + 3):
                assert ext_dim(ctx, n, lam, mu) == ext_dim(
                    ctx, n + ctx.period, lam, mu
                )


def test_render_and_parse_round_trip_strings():
    ctx = PrimeContext(5)
    assert StableElement.zero(ctx).render() == "0"
    e = StableElement.basis(ctx, 0, 0) + 2 * StableElement.basis(ctx, 2, 1)
    assert e.render() == "D0 + 2 O^2(D1)"
    e = -1 * StableElement.basis(ctx, 0, 3)
    assert e.render() == "-D3"


def test_json_round_trip():
    ctx = PrimeContext(5)
    rng = random.Random(5)
    for _ in range(50):
        e = _random_element(ctx, rng)
        back = StableElement.from_json_dict(e.to_json_dict())
        assert back.terms() == e.terms()
        assert back.ctx == e.ctx


@pytest.mark.parametrize("p,total", [(3, 6), (5, 20), (7, 42), (11, 110)])
def test_census_counts(p, total):
    entries = census(PrimeContext(p))
    assert len(entries) == total
    kinds = Counter(e.kind for e in entries)
    assert kinds["stable"] == (p - 1) ** 2
    assert kinds["projective"] == p - 1
    assert len({e.label for e in entries}) == total


@pytest.mark.parametrize("p", [3, 5, 7])
def test_census_identification_triple_injective(p):
    # (dim, head, socle) separates every census entry at oracle primes
    entries = census(PrimeContext(p))
    keys = {(e.dim, tuple(e.head), tuple(e.socle)) for e in entries}
    assert len(keys) == len(entries)


def test_census_simple_entries_have_matching_head_socle():
    for e in census(PrimeContext(5)):
        if e.kind == "stable" and e.shift == 0:
            assert e.head == e.socle == (e.j,)
        if e.kind == "projective":
            assert e.head == e.socle == (e.j,)


@pytest.mark.parametrize("p", PRIMES_MID)
def test_ar_quiver_mesh_symmetric(p):
    q = ar_quiver(PrimeContext(p))
    assert q.mesh_symmetric()
    assert len(q.stable_vertices) == (p - 1) ** 2
    assert len(q.projective_vertices) == p - 1


def test_ar_quiver_dot_and_json():
    q = ar_quiver(PrimeContext(3))
    dot = q.to_dot()
    assert dot.startswith("digraph")
    assert '"P_0"' in dot
    d = q.to_json_dict()
    assert d["p"] == 3
    assert len(d["stable_vertices"]) == 4
    assert len(d["projective_vertices"]) == 2
    assert all(len(edge) == 2 for edge in d["edges"])
    assert set(q.vertices) == set(d["stable_vertices"]) | set(d["projective_vertices"])
