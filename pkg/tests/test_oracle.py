"""Matrix-level oracle: explicit modules, homs, syzygies, decompositions."""

import numpy as np
import pytest

from greenp import DomainError, PrimeContext, ResourceGuardError, dim_projective, dim_simple
from greenp.oracle import (
    DEFAULT_LIMITS,
    MatRep,
    OracleLimits,
    check_oracle_prime,
    child_seed,
    coredim,
    direct_sum_rep,
    dual_rep,
    exterior_power,
    fitting_decompose,
    head_socle,
    hom_dim,
    hom_space,
    is_projective,
    norton_simple,
    omega_rep,
    perm_module,
    quotient_rep,
    reference_census,
    restriction_jordan,
    run_verification,
    simple_d,
    specht_rep,
    stable_strip,
    sub_rep,
    tensor_rep,
    trivial_rep,
)

ORACLE_PRIMES = [3, 5, 7]


def test_oracle_prime_guard():
    check_oracle_prime(PrimeContext(7))
    with pytest.raises(ResourceGuardError):
        check_oracle_prime(PrimeContext(11))
    check_oracle_prime(PrimeContext(11), OracleLimits(max_p=11))


@pytest.mark.parametrize("p", ORACLE_PRIMES)
def test_perm_module_traces_and_relations(p):
    ctx = PrimeContext(p)
    pm = perm_module(ctx)
    assert pm.degree == p
    # the transposition fixes p-2 points, the long cycle fixes none
    assert int(np.trace(pm.s)) % p == (p - 2) % p
    assert int(np.trace(pm.t)) % p == 0
    pm.verify_relations()


def test_bad_generators_rejected():
    ctx = PrimeContext(5)
    s = np.eye(3, dtype=np.int64)
    t = np.eye(3, dtype=np.int64)
    t[0, 1] = 1
    with pytest.raises(AssertionError):
        MatRep(ctx, s, t).verify_relations()


@pytest.mark.parametrize("p", ORACLE_PRIMES)
def test_simple_dimensions(p):
    ctx = PrimeContext(p)
    for j in range(p - 1):
        rep = simple_d(ctx, j)
        assert rep.degree == dim_simple(ctx, j)
        rep.verify_relations()
        assert norton_simple(rep)[0]


@pytest.mark.parametrize("p", ORACLE_PRIMES)
def test_specht_dimensions_and_structure(p):
    from math import comb

    ctx = PrimeContext(p)
    for i in range(p):
        rep = specht_rep(ctx, i)
        assert rep.degree == comb(p - 1, i)
        rep.verify_relations()
    # uniserial middle members: socle D_{i-1}, head D_i
    if p > 3:
        hs = head_socle(specht_rep(ctx, 2))
        assert hs == ((2,), (1,))


def test_exterior_powers_give_simples():
    ctx = PrimeContext(5)
    d1 = simple_d(ctx, 1)
    lam2 = exterior_power(d1, 2)
    assert lam2.degree == 3
    assert hom_dim(lam2, simple_d(ctx, 2)) == 1
    assert norton_simple(lam2)[0]


def test_trivial_and_perm_fixed_line():
    ctx = PrimeContext(5)
    pm = perm_module(ctx)
    tr = trivial_rep(ctx)
    # one fixed line in, one invariant quotient out
    assert hom_dim(tr, pm) == 1
    assert hom_dim(pm, tr) == 1
    assert is_projective(pm)  # the p-point permutation module is P_0
    assert pm.degree == dim_projective(ctx, 0)


def test_hom_schur_orthogonality():
    ctx = PrimeContext(5)
    simples = [simple_d(ctx, j) for j in range(4)]
    for a in range(4):
        for b in range(4):
            assert hom_dim(simples[a], simples[b]) == int(a == b)


def test_hom_counts_head_multiplicity():
    ctx = PrimeContext(5)
    m = tensor_rep(simple_d(ctx, 1), simple_d(ctx, 1))
    # stably D_0 + D_2 plus one defect-zero projective of dim 5
    assert hom_dim(perm_module(ctx), m) == 1  # P_0 head D_0
    assert m.degree == 9


def test_hom_space_matrices_intertwine():
    ctx = PrimeContext(5)
    a = specht_rep(ctx, 1)
    b = simple_d(ctx, 1)
    mats = hom_space(a, b)
    assert len(mats) == hom_dim(a, b) == 1
    f = mats[0]
    assert np.array_equal((f @ a.s) % 5, (b.s @ f) % 5)
    assert np.array_equal((f @ a.t) % 5, (b.t @ f) % 5)


def test_dual_and_direct_sum():
    ctx = PrimeContext(5)
    d1 = simple_d(ctx, 1)
    dd = dual_rep(d1)
    dd.verify_relations()
    assert hom_dim(dd, d1) == 1  # hooks are self-dual
    both = direct_sum_rep([d1, simple_d(ctx, 2)])
    assert both.degree == 6
    both.verify_relations()
    assert hom_dim(d1, both) == 1


def test_sub_and_quotient():
    ctx = PrimeContext(5)
    pm = perm_module(ctx)
    ones = np.ones((5, 1), dtype=np.int64)
    sub = sub_rep(pm, ones)
    assert sub.degree == 1
    assert hom_dim(sub, trivial_rep(ctx)) == 1
    quo = quotient_rep(pm, ones)
    assert quo.degree == 4
    quo.verify_relations()


def test_head_socle_examples():
    ctx = PrimeContext(5)
    refs = reference_census(5)
    assert head_socle(refs.stable_rep(1, 0), refs) == ((1,), (0,))
    assert head_socle(refs.stable_rep(2, 1), refs) == ((1, 3), (0, 2))
    assert head_socle(simple_d(ctx, 2), refs) == ((2,), (2,))


def test_omega_examples():
    ctx = PrimeContext(5)
    d0 = simple_d(ctx, 0)
    om = omega_rep(d0)
    assert om.cover == (0,)
    assert om.rep.degree == 4
    assert head_socle(om.rep) == ((1,), (0,))
    # four syzygies later the trivial module lands on D_3
    rep = d0
    for _ in range(4):
        rep = omega_rep(rep).rep
    assert rep.degree == 1
    assert hom_dim(rep, simple_d(ctx, 3)) == 1


def test_omega_of_projective_is_zero():
    ctx = PrimeContext(5)
    om = omega_rep(perm_module(ctx))
    assert om.rep.degree == 0
    assert om.cover == (0,)


def test_fitting_examples_p3():
    ctx = PrimeContext(3)
    m = tensor_rep(simple_d(ctx, 1), simple_d(ctx, 1))
    rep = fitting_decompose(m)
    assert not rep.residual
    assert [(s.label, s.kind) for s in rep.summands] == [("D_0", "stable")]


def test_fitting_examples_p5():
    ctx = PrimeContext(5)
    m = tensor_rep(simple_d(ctx, 1), simple_d(ctx, 1))
    rep = fitting_decompose(m)
    assert not rep.residual
    labels = sorted((s.label, s.kind, s.dim) for s in rep.summands)
    assert labels == [
        ("D_0", "stable", 1),
        ("D_2", "stable", 3),
        ("NP(dim=5)", "defect_zero", 5),
    ]
    assert sum(s.dim for s in rep.summands) == m.degree


def test_fitting_examples_p7():
    ctx = PrimeContext(7)
    m = tensor_rep(simple_d(ctx, 2), simple_d(ctx, 2))
    rep = fitting_decompose(m)
    assert not rep.residual
    stable = sorted(s.label for s in rep.summands if s.kind == "stable")
    assert stable == ["D_0", "D_2", "D_4"]
    assert sum(s.dim for s in rep.summands) == m.degree == 100


def test_stable_strip_examples():
    ctx = PrimeContext(5)
    core, rep = stable_strip(perm_module(ctx))
    assert core.degree == 0
    assert [(s.label, s.kind) for s in rep.summands] == [("P_0", "projective")]
    d1 = simple_d(ctx, 1)
    core, rep = stable_strip(d1)
    assert core.degree == 3
    assert [(s.label, s.kind) for s in rep.summands] == [("D_1", "stable")]


def test_stable_strip_specht_tensor_core_indecomposable():
    ctx = PrimeContext(5)
    m = tensor_rep(specht_rep(ctx, 2), simple_d(ctx, 1))
    core, rep = stable_strip(m)
    assert not rep.residual
    stable = [s for s in rep.summands if s.kind == "stable"]
    assert len(stable) >= 1
    assert core.degree == sum(s.dim for s in stable)


@pytest.mark.parametrize(
    "p,j,expected",
    [
        (5, 0, (1,)),
        (5, 1, (3,)),
        (5, 2, (3,)),
        (5, 3, (1,)),
        (7, 2, (3,)),
    ],
)
def test_restriction_jordan_simples(p, j, expected):
    ctx = PrimeContext(p)
    got = restriction_jordan(simple_d(ctx, j))
    assert tuple(b for b in got if b != p) == expected


def test_restriction_jordan_projective_is_free():
    ctx = PrimeContext(5)
    assert restriction_jordan(perm_module(ctx)) == (5,)


def test_coredim_examples_and_guards():
    ctx5 = PrimeContext(5)
    d0 = simple_d(ctx5, 0)
    d1 = simple_d(ctx5, 1)
    assert coredim(d0, 1) == 1
    assert coredim(d1, 1) == 3
    assert coredim(d1, 2) == 4  # D0 + D2 survive, dim 1 + 3
    ctx3 = PrimeContext(3)
    assert coredim(simple_d(ctx3, 1), 3) == 1
    with pytest.raises(ResourceGuardError):
        coredim(d1, DEFAULT_LIMITS.coredim_max_n + 1)
    with pytest.raises(ResourceGuardError):
        coredim(simple_d(PrimeContext(7), 1), 2)
    # the caps move with the limits object; D1 (x) D1 = D0 + D2 at p = 7
    assert coredim(simple_d(PrimeContext(7), 1), 2, limits=OracleLimits(coredim_max_p=7)) == 11


@pytest.mark.parametrize("p", ORACLE_PRIMES)
def test_reference_census_covers_all_classes(p):
    from greenp import StableClass, dim_class

    ctx = PrimeContext(p)
    refs = reference_census(p)
    for shift in range(p - 1):
        for j in range(p - 1):
            rep = refs.stable_rep(shift, j)
            assert rep.degree == dim_class(ctx, StableClass(shift, j))


def test_child_seed_stable():
    assert child_seed(1, "a") != child_seed(1, "b")
    assert child_seed(1, "a") == child_seed(1, "a")
    assert child_seed(2, "a") != child_seed(1, "a")
    assert 0 <= child_seed(12345, "tag") < 2**31


def test_run_verification_smoke_and_determinism():
    records = run_verification(3, seed=7)
    assert records
    assert all(r.passed for r in records)
    again = run_verification(3, seed=7)
    assert [r.to_json_dict() for r in records] == [r.to_json_dict() for r in again]


def test_run_verification_check_selection():
    records = run_verification(3, checks=("dimension_formulas",))
    assert records and all(r.check == "dimension_formulas" for r in records)
    with pytest.raises(DomainError):
        run_verification(3, checks=("no_such_check",))
    with pytest.raises(ResourceGuardError):
        run_verification(11)
