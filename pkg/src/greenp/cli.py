"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 domain error (bad indices,
malformed expressions), 3 a verification check failed, 4 a resource
guard refused the computation.
"""

import argparse
import json
import os
import sys
from collections import Counter

from .diagram import PrimeContext
from .errors import DomainError, ResourceGuardError
from .expressions import parse_element
from .invariants import gamma_class, gamma_element
from .stable_ring import (
    StableElement,
    ar_quiver,
    census,
    dim_class,
    loewy,
    min_resolution_term,
    syzygy,
)
from .upsilon import FieldSpec, upsilon_report

DEFAULT_SEED = 0x5EED


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _single_class(e: StableElement):
    terms = e.terms()
    if len(terms) != 1 or terms[0][1] != 1:
        raise DomainError(
            f"expected a single class with multiplicity one, got {e.render()!r}"
        )
    return terms[0][0]


def _nonnegative(e: StableElement) -> None:
    for c, m in e.terms():
        if m < 0:
            raise DomainError(
                f"this command needs a genuine module; {e.render()!r} has a "
                f"negative multiplicity on {c.name()}"
            )


def _cmd_tensor(args) -> int:
    ctx = PrimeContext(args.prime)
    factors = [parse_element(ctx, t, allow_specht=args.as_syzygy) for t in args.expr]
    result = factors[0]
    for f in factors[1:]:
        result = result * f
    shown = " * ".join(f"({t.strip()})" if len(args.expr) > 1 else t.strip() for t in args.expr)
    payload = {
        "p": ctx.p,
        "input": shown,
        "result": result.to_json_dict(),
        "rendered": result.render(),
    }
    _emit(args, payload, f"{shown} = {result.render()}")
    return 0


def _cmd_syzygy(args) -> int:
    ctx = PrimeContext(args.prime)
    e = parse_element(ctx, args.expr, allow_specht=args.as_syzygy)
    result = syzygy(e, args.n)
    payload = {
        "p": ctx.p,
        "input": f"O^{args.n}({args.expr.strip()})",
        "result": result.to_json_dict(),
        "rendered": result.render(),
    }
    _emit(args, payload, f"O^{args.n}({args.expr.strip()}) = {result.render()}")
    return 0


def _cmd_loewy(args) -> int:
    ctx = PrimeContext(args.prime)
    c = _single_class(parse_element(ctx, args.expr, allow_specht=args.as_syzygy))
    lw = loewy(ctx, c)
    head = list(lw.head)
    socle = list(lw.head if lw.simple else lw.socle)
    dim = dim_class(ctx, c)
    payload = {
        "p": ctx.p,
        "class": {"shift": c.shift, "j": c.j},
        "name": c.name(),
        "dim": dim,
        "simple": lw.simple,
        "head": head,
        "socle": socle,
    }
    if lw.simple:
        text = f"{c.name()}  dim {dim}\nsimple: D_{c.j}"
    else:
        text = (
            f"{c.name()}  dim {dim}\n"
            f"head:  {' + '.join(f'D_{t}' for t in head)}\n"
            f"socle: {' + '.join(f'D_{t}' for t in socle)}"
        )
    _emit(args, payload, text)
    return 0


def _cmd_resolve(args) -> int:
    ctx = PrimeContext(args.prime)
    e = parse_element(ctx, args.expr, allow_specht=args.as_syzygy)
    _nonnegative(e)
    if e.is_zero():
        raise DomainError("cannot resolve the zero element")
    if args.n < 0:
        raise DomainError(f"resolution length {args.n} must be nonnegative")
    terms = []
    lines = []
    for n in range(args.n + 1):
        projs: Counter = Counter()
        for c, m in e.terms():
            for t in min_resolution_term(ctx, c, n):
                projs[t] += m
        szg = syzygy(e, n)
        plist = sorted(projs.elements())
        terms.append(
            {"n": n, "projectives": plist, "syzygy": szg.to_json_dict()}
        )
        pstr = " + ".join(f"P{t}" for t in plist)
        lines.append(f"n={n}: {pstr}   (syzygy {szg.render()})")
    payload = {"p": ctx.p, "input": args.expr.strip(), "terms": terms}
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_gamma(args) -> int:
    ctx = PrimeContext(args.prime)
    e = parse_element(ctx, args.expr, allow_specht=args.as_syzygy)
    value = gamma_element(e)
    classes = []
    lines = []
    for c, m in e.terms():
        gv = gamma_class(ctx, c)
        classes.append(
            {
                "class": c.name(),
                "mult": m,
                "sine_index": gv.sine_index,
                "value": gv.value(),
            }
        )
        lines.append(f"  {c.name()} x{m}: sin({gv.sine_index} pi/{ctx.p})/sin(pi/{ctx.p}) = {gv.value():.6f}")
    payload = {"p": ctx.p, "input": args.expr.strip(), "value": value, "classes": classes}
    text = f"gamma({args.expr.strip()}) = {value:.6f}"
    if classes:
        text += "\n" + "\n".join(lines)
    _emit(args, payload, text)
    return 0


def _cmd_upsilon(args) -> int:
    ctx = PrimeContext(args.prime)
    field = FieldSpec.parse(args.field)
    report = upsilon_report(ctx, field, decompose=args.decompose, seed=args.seed)
    payload = report.to_json_dict()
    lines = [
        f"Upsilon at p={ctx.p} over {field}: dim {report.dim}, "
        f"radical dim {report.radical_dim} "
        f"({'semisimple' if report.semisimple else 'not semisimple'})"
    ]
    if report.summand_dims is not None:
        lines.append(
            "local summand dims over the closure: "
            + str(list(report.summand_dims))
        )
    elif report.undecided:
        lines.append("local decomposition undecided over Q")
    lines.append(f"trace form discriminant: {report.trace_discriminant}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_ar_quiver(args) -> int:
    ctx = PrimeContext(args.prime)
    quiver = ar_quiver(ctx)
    if args.dot and not args.json:
        print(quiver.to_dot())
        return 0
    payload = quiver.to_json_dict()
    text = (
        f"stable vertices: {len(quiver.stable_vertices)}\n"
        f"projective vertices: {len(quiver.projective_vertices)}\n"
        f"arrows: {len(quiver.edges)}\n"
        f"mesh symmetric: {quiver.mesh_symmetric()}"
    )
    _emit(args, payload, text)
    return 0


def _cmd_census(args) -> int:
    ctx = PrimeContext(args.prime)
    entries = census(ctx)
    payload = [e.to_json_dict() for e in entries]
    if args.json:
        print(json.dumps(payload, indent=2))
        return 0
    width = max(len(e.label) for e in entries)
    for e in entries:
        head = ",".join(str(t) for t in e.head)
        socle = ",".join(str(t) for t in e.socle)
        print(
            f"{e.label:<{width}}  kind={e.kind:<10} dim={e.dim:<5} "
            f"head={{{head}}} socle={{{socle}}}"
        )
    return 0


def _cmd_verify(args) -> int:
    import dataclasses

    from .oracle import DEFAULT_LIMITS, run_verification

    checks = None
    if args.checks:
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    limits = DEFAULT_LIMITS
    if args.max_tensor_power is not None:
        if args.max_tensor_power < 1:
            raise DomainError("--max-tensor-power must be at least 1")
        limits = dataclasses.replace(limits, coredim_max_n=args.max_tensor_power)
    records = run_verification(args.prime, seed=args.seed, checks=checks, limits=limits)
    failed = [r for r in records if not r.passed]
    payload = {
        "p": args.prime,
        "seed": args.seed,
        "passed": not failed,
        "counts": {"total": len(records), "failed": len(failed)},
        "records": [r.to_json_dict() for r in records],
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        per: Counter = Counter()
        bad: Counter = Counter()
        for r in records:
            per[r.check] += 1
            if not r.passed:
                bad[r.check] += 1
        for name in sorted(per):
            status = "FAIL" if bad[name] else "ok"
            print(f"{status:>4}  {name}: {per[name] - bad[name]}/{per[name]}")
        for r in failed:
            print(f"FAIL {r.check} {r.inputs}: expected {r.expected}, got {r.got}")
        print(
            f"{len(records) - len(failed)}/{len(records)} checks passed "
            f"(p={args.prime}, seed={args.seed})"
        )
    return 3 if failed else 0


def _resolve_seed(argv_seed: int | None) -> int:
    if argv_seed is not None:
        return argv_seed
    env = os.environ.get("GREENP_SEED")
    if env:
        try:
            return int(env, 0)
        except ValueError:
            raise DomainError(f"GREENP_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def _seed_arg(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="greenp",
        description=(
            "Stable Green ring calculator for the symmetric group on p "
            "letters in characteristic p, with a matrix-level verifier."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(sp, expr=None, specht=False, seed=False):
        sp.add_argument(
            "-p", "--prime", type=int, required=True, help="the odd prime p"
        )
        sp.add_argument("--json", action="store_true", help="machine readable output")
        if expr == "many":
            sp.add_argument("expr", nargs="+", help="expressions to multiply")
        elif expr == "one":
            sp.add_argument("expr", help="expression, e.g. 'D1 * D2 + O^2(D0)'")
        if specht:
            sp.add_argument(
                "--as-syzygy",
                action="store_true",
                help="accept S atoms, rewritten as syzygies of D0",
            )
        if seed:
            sp.add_argument(
                "--seed",
                type=_seed_arg,
                default=None,
                help="randomness seed (overrides GREENP_SEED; default 0x5EED)",
            )

    sp = sub.add_parser("tensor", help="multiply in the stable Green ring")
    add_common(sp, expr="many", specht=True)
    sp.set_defaults(func=_cmd_tensor)

    sp = sub.add_parser("syzygy", help="apply a syzygy power to an expression")
    add_common(sp, expr="one", specht=True)
    sp.add_argument("-n", type=int, default=1, help="syzygy degree, any integer")
    sp.set_defaults(func=_cmd_syzygy)

    sp = sub.add_parser("loewy", help="head and socle of one stable class")
    add_common(sp, expr="one", specht=True)
    sp.set_defaults(func=_cmd_loewy)

    sp = sub.add_parser("resolve", help="minimal projective resolution terms")
    add_common(sp, expr="one", specht=True)
    sp.add_argument(
        "-n", type=int, default=10, help="last resolution degree to print"
    )
    sp.set_defaults(func=_cmd_resolve)

    sp = sub.add_parser("gamma", help="tensor growth invariant of a module")
    add_common(sp, expr="one", specht=True)
    sp.set_defaults(func=_cmd_gamma)

    sp = sub.add_parser("upsilon", help="semisimplicity ring over a field")
    add_common(sp, seed=True)
    sp.add_argument(
        "--field", default="Q", help="coefficient field: Q or a prime (default Q)"
    )
    sp.add_argument(
        "--decompose",
        action="store_true",
        help="also compute the block decomposition over the closure",
    )
    sp.set_defaults(func=_cmd_upsilon)

    sp = sub.add_parser("ar-quiver", help="stable Auslander-Reiten quiver")
    add_common(sp)
    sp.add_argument("--dot", action="store_true", help="emit graphviz source")
    sp.set_defaults(func=_cmd_ar_quiver)

    sp = sub.add_parser("census", help="all stable classes and projectives")
    add_common(sp)
    sp.set_defaults(func=_cmd_census)

    sp = sub.add_parser(
        "verify", help="cross-check predictions against explicit matrix modules"
    )
    add_common(sp, seed=True)
    sp.add_argument(
        "--checks",
        default=None,
        help="comma separated check names (default: all)",
    )
    sp.add_argument(
        "--max-tensor-power",
        type=int,
        default=None,
        help="cap for the tensor power growth check",
    )
    sp.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "seed"):
            args.seed = _resolve_seed(args.seed)
        return args.func(args)
    except DomainError as exc:
        print(f"greenp: {exc}", file=sys.stderr)
        return 2
    except ResourceGuardError as exc:
        print(f"greenp: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
