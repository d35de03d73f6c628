"""The tensor-semisimplicity ring and its radicals over Q and GF(q)."""

import numpy as np
import pytest

from greenp import (
    DomainError,
    FieldSpec,
    PrimeContext,
    UpsilonAlgebra,
    is_semisimple,
    local_decomposition,
    radical,
    upsilon_report,
)


def _table(alg):
    """Multiplication table as dicts {t: coeff} keyed by basis pair."""
    out = {}
    for i in range(alg.dim):
        for j in range(alg.dim):
            out[(i, j)] = {
                t: int(c) for t, c in enumerate(alg.struct[i, j]) if c
            }
    return out


def test_field_spec():
    assert FieldSpec.parse("Q") == FieldSpec(None)
    assert FieldSpec.parse("q") == FieldSpec(None)
    assert FieldSpec.parse("7") == FieldSpec(7)
    assert FieldSpec.parse(5) == FieldSpec(5)
    assert str(FieldSpec(None)) == "Q"
    assert str(FieldSpec(3)) == "GF(3)"
    assert FieldSpec(None).json_name() == "Q"
    assert FieldSpec(11).json_name() == 11
    for bad in ("x", "4", 4, 1, -3, "0"):
        with pytest.raises(DomainError):
            FieldSpec.parse(bad)


def test_p3_is_integral_group_ring_of_order_two():
    # basis 1, x with x*x = 1
    alg = UpsilonAlgebra(PrimeContext(3))
    assert alg.dim == 2
    tbl = _table(alg)
    assert tbl[(0, 0)] == {0: 1}
    assert tbl[(0, 1)] == {1: 1}
    assert tbl[(1, 0)] == {1: 1}
    assert tbl[(1, 1)] == {0: 1}


def test_p5_multiplication_table():
    # with 1 = e0, x = e1, y = e2, z = e3:
    #   x x = 1 + y, x y = x + z, x z = y,
    #   y y = 1 + y, y z = x,     z z = 1
    alg = UpsilonAlgebra(PrimeContext(5))
    assert alg.dim == 4
    tbl = _table(alg)
    assert tbl[(1, 1)] == {0: 1, 2: 1}
    assert tbl[(1, 2)] == {1: 1, 3: 1}
    assert tbl[(1, 3)] == {2: 1}
    assert tbl[(2, 2)] == {0: 1, 2: 1}
    assert tbl[(2, 3)] == {1: 1}
    assert tbl[(3, 3)] == {0: 1}
    for k in range(4):
        assert tbl[(0, k)] == {k: 1}
        assert tbl[(k, 0)] == {k: 1}
    # commutative
    for i in range(4):
        for j in range(4):
            assert tbl[(i, j)] == tbl[(j, i)]


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_structure_constants_associative(p):
    alg = UpsilonAlgebra(PrimeContext(p))
    s = alg.struct
    lhs = np.einsum("ijt,tks->ijks", s, s)
    rhs = np.einsum("jkt,its->ijks", s, s)
    assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize(
    "p,q,expected",
    [
        (3, 2, 1),
        (3, 3, 0),
        (3, 5, 0),
        (5, 2, 2),
        (5, 5, 2),
        (5, 3, 0),
        (5, 7, 0),
        (5, 11, 0),
        (5, 13, 0),
        (7, 2, 3),
        (7, 7, 4),
        (7, 3, 0),
    ],
)
def test_radical_dimensions_gf(p, q, expected):
    alg = UpsilonAlgebra(PrimeContext(p))
    res = radical(alg, FieldSpec(q))
    assert res.dimension == expected
    assert res.nilpotency_verified
    assert len(res.basis) == expected
    assert is_semisimple(alg, FieldSpec(q)) == (expected == 0)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_rational_radical_vanishes(p):
    alg = UpsilonAlgebra(PrimeContext(p))
    res = radical(alg, FieldSpec(None))
    assert res.dimension == 0
    assert is_semisimple(alg, FieldSpec(None))


def test_p5_semisimplicity_prime_scan():
    # semisimple over GF(q) exactly when q avoids the discriminant primes 2, 5
    alg = UpsilonAlgebra(PrimeContext(5))
    for q in [3, 7, 11, 13, 17, 19]:
        assert is_semisimple(alg, FieldSpec(q))
    for q in [2, 5]:
        assert not is_semisimple(alg, FieldSpec(q))


def test_trace_discriminant_prime_support():
    # primes dividing the trace form discriminant = primes with radical
    alg5 = UpsilonAlgebra(PrimeContext(5))
    disc = alg5.trace_discriminant()
    assert disc != 0
    assert disc % 2 == 0 and disc % 5 == 0
    for q in (3, 7, 11, 13):
        assert disc % q != 0
    alg7 = UpsilonAlgebra(PrimeContext(7))
    assert alg7.trace_discriminant() == 153664  # 2^6 * 7^4


@pytest.mark.parametrize(
    "p,q,dims",
    [
        (3, 2, (2,)),
        (3, 3, (1, 1)),
        (3, 5, (1, 1)),
        (5, 2, (2, 2)),
        (5, 5, (2, 2)),
        (5, 3, (1, 1, 1, 1)),
        (5, 7, (1, 1, 1, 1)),
        (5, 11, (1, 1, 1, 1)),
        (5, 13, (1, 1, 1, 1)),
        (7, 2, (2, 2, 2)),
        (7, 7, (3, 3)),
    ],
)
def test_local_decomposition_gf(p, q, dims):
    alg = UpsilonAlgebra(PrimeContext(p))
    dec = local_decomposition(alg, FieldSpec(q))
    assert not dec.undecided
    assert dec.summand_dims == dims
    assert sum(dims) == alg.dim
    # blocks carry (dim, residue degree) with degree dividing dim
    for bdim, deg in dec.blocks:
        assert bdim % deg == 0


@pytest.mark.parametrize(
    "p,dims,blocks",
    [
        (3, (1, 1), ((1, 1), (1, 1))),
        (5, (1, 1, 1, 1), ((2, 2), (2, 2))),
        (7, (1, 1, 1, 1, 1, 1), ((3, 3), (3, 3))),
    ],
)
def test_local_decomposition_rational(p, dims, blocks):
    # over Q the algebra splits into number fields; geometrically the
    # block of dimension d with residue degree d contributes d points
    alg = UpsilonAlgebra(PrimeContext(p))
    dec = local_decomposition(alg, FieldSpec(None))
    assert not dec.undecided
    assert dec.summand_dims == dims
    assert tuple(sorted(dec.blocks)) == tuple(sorted(blocks))


def test_radical_dim_invariant_under_basis_permutation():
    # relabel the non-identity basis vectors; the radical dimension of a
    # structure-constant algebra cannot see the labels
    ctx = PrimeContext(5)
    alg = UpsilonAlgebra(ctx)
    perm = np.array([0, 3, 1, 2])  # keeps e_0 = 1 in place
    permuted = UpsilonAlgebra(ctx)
    permuted.struct = alg.struct[np.ix_(perm, perm, perm)]
    permuted._verify()
    for q in (None, 2, 3, 5, 7):
        assert (
            radical(permuted, FieldSpec(q)).dimension
            == radical(alg, FieldSpec(q)).dimension
        )


@pytest.mark.parametrize("q", [None, 2, 3, 5])
def test_report_round_trip(q):
    ctx = PrimeContext(5)
    rep = upsilon_report(ctx, FieldSpec(q), decompose=True, seed=0)
    d = rep.to_json_dict()
    assert d["p"] == 5
    assert d["dim"] == 4
    assert d["field"] == ("Q" if q is None else q)
    assert d["semisimple"] == (d["radical_dim"] == 0)
    assert d["summand_dims"] is not None
    rep2 = upsilon_report(ctx, FieldSpec(q), decompose=False, seed=0)
    assert rep2.summand_dims is None
    assert rep2.radical_dim == rep.radical_dim


def test_report_deterministic():
    ctx = PrimeContext(7)
    a = upsilon_report(ctx, FieldSpec(None), seed=3).to_json_dict()
    b = upsilon_report(ctx, FieldSpec(None), seed=3).to_json_dict()
    assert a == b
