"""Cross-checks between the symbolic layer and explicit matrix modules.

Every check builds actual GF(p) representations, measures something with
exact linear algebra (decompositions, hom spaces, Jordan types), and
compares against the corresponding combinatorial prediction.  Output is
a flat list of records so the CLI can print a pass/fail table and JSON
consumers get structured evidence.
"""

from collections import Counter
from dataclasses import dataclass
from math import comb

from ..diagram import PrimeContext, r_set, s_factors
from ..invariants import gamma_class, restriction_jordan_stable
from ..stable_ring import (
    StableClass,
    StableElement,
    canonicalize,
    dim_class,
    ext_dim,
    loewy,
    min_resolution_term,
)
from .decompose import (
    DEFAULT_LIMITS,
    OracleLimits,
    _iso_exists,
    child_seed,
    coredim,
    head_socle,
    reference_census,
    restriction_jordan,
    stable_strip,
)
from .homspace import hom_dim
from .omega import omega_rep
from .reps import DEFAULT_SEED, dual_rep, specht_rep, tensor_rep

CHECK_NAMES = (
    "dimension_formulas",
    "tensor_simple_pair",
    "syzygy_chain",
    "jordan_restriction",
    "specht_structure",
    "cartan_matrix",
    "ext_groups",
    "self_duality",
    "projective_syzygy",
    "coredim_growth",
)


@dataclass(frozen=True)
class CheckRecord:
    check: str
    p: int
    inputs: dict
    expected: str
    got: str
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "p": self.p,
            "inputs": self.inputs,
            "expected": self.expected,
            "got": self.got,
            "passed": self.passed,
        }


def _rec(check, p, inputs, expected, got) -> CheckRecord:
    return CheckRecord(
        check=check,
        p=p,
        inputs=inputs,
        expected=str(expected),
        got=str(got),
        passed=str(expected) == str(got),
    )


def _check_dimension_formulas(refs):
    p = refs.ctx.p
    for j in range(p - 1):
        yield _rec(
            "dimension_formulas",
            p,
            {"module": f"D_{j}"},
            comb(p - 2, j),
            refs.simples[j].degree,
        )
    for t in range(p - 1):
        expect = 2 * comb(p - 2, t) + (comb(p - 2, t - 1) if t else 0) + comb(p - 2, t + 1)
        yield _rec(
            "dimension_formulas",
            p,
            {"module": f"P_{t}"},
            expect,
            refs.projectives[t].degree,
        )


def _core_summary(report) -> str:
    parts = []
    for cls, m in sorted(report.stable_classes().items()):
        parts.extend([cls.name()] * m)
    return " + ".join(parts) if parts else "0"


def _check_tensor_simple_pair(refs, seed):
    ctx = refs.ctx
    p = ctx.p
    for i in range(p - 1):
        for j in range(i, p - 1):
            rep = tensor_rep(refs.simples[i], refs.simples[j])
            _core, report = stable_strip(rep, seed=child_seed(seed, f"tp{i},{j}"))
            expected = " + ".join(f"D_{t}" for t in r_set(ctx, i, j))
            got = _core_summary(report)
            if report.residual:
                got += " [unidentified summand]"
            yield _rec(
                "tensor_simple_pair",
                p,
                {"i": i, "j": j, "dim": rep.degree},
                expected,
                got,
            )


def _check_syzygy_chain(refs, seed):
    ctx = refs.ctx
    p = ctx.p
    period = 2 * p - 2
    for j in range(p - 1):
        base = StableClass(0, j)
        bad_dim, bad_loewy, bad_cover = [], [], []
        for n in range(period):
            c = canonicalize(ctx, n, j)
            rep = refs.stable_rep(n, j)
            if rep.degree != dim_class(ctx, c):
                bad_dim.append(f"n={n}: {rep.degree} != {dim_class(ctx, c)}")
            lw = loewy(ctx, c)
            want_head = tuple(sorted(lw.head))
            want_socle = tuple(sorted(lw.head if lw.simple else lw.socle))
            hs = head_socle(rep, refs, seed=child_seed(seed, f"chainhs{j},{n}"))
            if (tuple(sorted(hs[0])), tuple(sorted(hs[1]))) != (want_head, want_socle):
                bad_loewy.append(f"n={n}: {hs} != ({want_head}, {want_socle})")
            nxt = omega_rep(rep, refs=refs, seed=child_seed(seed, f"chain{j},{n}"))
            refs._stable.setdefault((n + 1, j), nxt.rep)
            want_cover = tuple(sorted(min_resolution_term(ctx, base, n)))
            if tuple(sorted(nxt.cover)) != want_cover:
                bad_cover.append(f"n={n}: {nxt.cover} != {want_cover}")
        yield _rec(
            "syzygy_chain",
            p,
            {"j": j, "aspect": "dimensions", "steps": period},
            "all match",
            "all match" if not bad_dim else "; ".join(bad_dim),
        )
        yield _rec(
            "syzygy_chain",
            p,
            {"j": j, "aspect": "head and socle", "steps": period},
            "all match",
            "all match" if not bad_loewy else "; ".join(bad_loewy),
        )
        yield _rec(
            "syzygy_chain",
            p,
            {"j": j, "aspect": "projective covers", "steps": period},
            "all match",
            "all match" if not bad_cover else "; ".join(bad_cover),
        )
        half = _iso_exists(
            refs.stable_rep(p - 1, j),
            refs.simples[p - 2 - j],
            seed=child_seed(seed, f"half{j}"),
        )
        yield _rec(
            "syzygy_chain",
            p,
            {"j": j, "aspect": f"step {p - 1} is D_{p - 2 - j}"},
            True,
            half,
        )
        full = _iso_exists(
            refs.stable_rep(period, j),
            refs.simples[j],
            seed=child_seed(seed, f"full{j}"),
        )
        yield _rec(
            "syzygy_chain",
            p,
            {"j": j, "aspect": f"step {period} is D_{j} again"},
            True,
            full,
        )


def _check_jordan_restriction(refs, seed):
    ctx = refs.ctx
    p = ctx.p
    for j in range(p - 1):
        for shift in (0, 1):
            rep = refs.stable_rep(shift, j)
            k = restriction_jordan_stable(ctx, j)[0]
            block = k if shift % 2 == 0 else p - k
            nfree = (rep.degree - block) // p
            expected = tuple(sorted([p] * nfree + [block], reverse=True))
            got = restriction_jordan(rep)
            yield _rec(
                "jordan_restriction",
                p,
                {"class": StableClass(shift, j).name(), "gamma_sine_index": gamma_class(ctx, StableClass(shift, j)).sine_index},
                expected,
                tuple(sorted(got, reverse=True)),
            )


def _check_specht_structure(refs, seed):
    ctx = refs.ctx
    p = ctx.p
    for i in range(p):
        rep = specht_rep(ctx, i)
        factors = s_factors(ctx, i)
        yield _rec(
            "specht_structure",
            p,
            {"i": i, "aspect": "dimension"},
            comb(p - 1, i),
            rep.degree,
        )
        head, socle = head_socle(rep, refs, seed=child_seed(seed, f"sp{i}"))
        want_head = (factors[-1],)
        want_socle = (factors[0],)
        yield _rec(
            "specht_structure",
            p,
            {"i": i, "aspect": "head and socle"},
            (want_head, want_socle),
            (head, socle),
        )
        # the i-th syzygy of the trivial module is S_i on the nose,
        # which is what lets the calculator accept S atoms as shifts
        ok = _iso_exists(
            refs.stable_rep(i, 0), rep, seed=child_seed(seed, f"spo{i}")
        )
        yield _rec(
            "specht_structure",
            p,
            {"i": i, "aspect": "syzygy of trivial"},
            True,
            ok,
        )


def _check_cartan_matrix(refs, seed):
    p = refs.ctx.p
    got = [
        [
            hom_dim(refs.projectives[s], refs.projectives[t], seed=child_seed(seed, f"ct{s},{t}"))
            for t in range(p - 1)
        ]
        for s in range(p - 1)
    ]
    expected = [
        [2 if s == t else (1 if abs(s - t) == 1 else 0) for t in range(p - 1)]
        for s in range(p - 1)
    ]
    yield _rec(
        "cartan_matrix",
        p,
        {"size": p - 1},
        expected,
        got,
    )


def _check_ext_groups(refs, seed, max_degree=4):
    ctx = refs.ctx
    p = ctx.p
    for n in range(max_degree + 1):
        expected = [[ext_dim(ctx, n, lam, mu) for mu in range(p - 1)] for lam in range(p - 1)]
        got = [
            [
                hom_dim(
                    refs.stable_rep(n, lam),
                    refs.simples[mu],
                    seed=child_seed(seed, f"ext{n},{lam},{mu}"),
                )
                for mu in range(p - 1)
            ]
            for lam in range(p - 1)
        ]
        yield _rec(
            "ext_groups",
            p,
            {"n": n},
            expected,
            got,
        )


def _check_self_duality(refs, seed):
    p = refs.ctx.p
    for j in range(p - 1):
        ok = _iso_exists(
            refs.simples[j], dual_rep(refs.simples[j]), seed=child_seed(seed, f"sd{j}")
        )
        yield _rec("self_duality", p, {"module": f"D_{j}"}, True, ok)


def _check_projective_syzygy(refs, seed):
    p = refs.ctx.p
    for t in range(p - 1):
        res = omega_rep(refs.projectives[t], refs=refs, seed=child_seed(seed, f"po{t}"))
        yield _rec(
            "projective_syzygy",
            p,
            {"module": f"P_{t}"},
            (0, (t,)),
            (res.rep.degree, res.cover),
        )


def _check_coredim_growth(refs, seed, limits):
    ctx = refs.ctx
    p = ctx.p
    if p > limits.coredim_max_p:
        return
    n = limits.coredim_max_n
    cd = coredim(refs.simples[1], n, seed=child_seed(seed, "cg"), limits=limits)
    gamma = gamma_class(ctx, StableClass(0, 1)).value()
    rate = cd ** (1.0 / n)
    ok = 0.75 * gamma <= rate <= 1.25 * gamma
    yield _rec(
        "coredim_growth",
        p,
        {"module": "D_1", "power": n, "coredim": cd, "rate": round(rate, 4), "gamma": round(gamma, 4)},
        "within 25% of gamma",
        "within 25% of gamma" if ok else f"rate {rate:.4f} vs gamma {gamma:.4f}",
    )


_CHECK_FUNCS = {
    "dimension_formulas": lambda refs, seed, limits: _check_dimension_formulas(refs),
    "tensor_simple_pair": lambda refs, seed, limits: _check_tensor_simple_pair(refs, seed),
    "syzygy_chain": lambda refs, seed, limits: _check_syzygy_chain(refs, seed),
    "jordan_restriction": lambda refs, seed, limits: _check_jordan_restriction(refs, seed),
    "specht_structure": lambda refs, seed, limits: _check_specht_structure(refs, seed),
    "cartan_matrix": lambda refs, seed, limits: _check_cartan_matrix(refs, seed),
    "ext_groups": lambda refs, seed, limits: _check_ext_groups(refs, seed),
    "self_duality": lambda refs, seed, limits: _check_self_duality(refs, seed),
    "projective_syzygy": lambda refs, seed, limits: _check_projective_syzygy(refs, seed),
    "coredim_growth": _check_coredim_growth,
}


def run_verification(
    p: int,
    seed: int = DEFAULT_SEED,
    checks: tuple[str, ...] | None = None,
    limits: OracleLimits = DEFAULT_LIMITS,
) -> list[CheckRecord]:
    """Run the oracle cross-checks for one prime; returns all records."""
    from ..errors import DomainError

    names = CHECK_NAMES if checks is None else tuple(checks)
    for name in names:
        if name not in _CHECK_FUNCS:
            raise DomainError(
                f"unknown check {name!r}; available: {', '.join(CHECK_NAMES)}"
            )
    refs = reference_census(p)
    records: list[CheckRecord] = []
    for name in names:
        gen = _CHECK_FUNCS[name](refs, child_seed(seed, name), limits)
        records.extend(gen)
    return records
