"""The stable Green ring of the principal block of F Sigma_p.

A stable class is a pair (shift, j) standing for the shift-th syzygy of
the hook simple D_j, taken modulo projective summands.  Classes are kept
in a canonical window: shift in [0, p-2], using the relations

    shift ~ shift + (2p - 2)            (periodicity)
    (shift, j) ~ (shift - (p-1), p-2-j) (half-period flip)

Tensor products are computed from the head label sets R(i, j): the
product of the classes (k, i) and (l, j) is the sum of (k + l, t) over
t in R(i, j), each term re-canonicalized.  Elements are integer linear
combinations of classes; projective modules are zero here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, NamedTuple

from .diagram import PrimeContext, r_set
from .errors import DomainError


class StableClass(NamedTuple):
    shift: int
    j: int

    def name(self) -> str:
        """Display label, e.g. O^2(D_1) or P-free shorthand D_1."""
        if self.shift == 0:
            return f"D_{self.j}"
        return f"O^{self.shift}(D_{self.j})"

    def expr(self) -> str:
        """Label in calculator expression syntax, e.g. O^2(D1)."""
        if self.shift == 0:
            return f"D{self.j}"
        return f"O^{self.shift}(D{self.j})"


def canonicalize(ctx: PrimeContext, shift: int, j: int) -> StableClass:
    """Reduce (shift, j) into the canonical window shift in [0, p-2]."""
    ctx.check_simple_index(j)
    s = shift % ctx.period
    if s >= ctx.p - 1:
        return StableClass(s - (ctx.p - 1), ctx.p - 2 - j)
    return StableClass(s, j)


@dataclass(frozen=True)
class LoewyPair:
    """Head and socle label multisets of a stable class.

    A simple class has a single radical layer; it is reported with
    head = (j,), socle = () and the simple flag set, so that summing
    dimensions over head and socle gives the module dimension.
    """

    head: tuple[int, ...]
    socle: tuple[int, ...]
    simple: bool


def loewy(ctx: PrimeContext, c: StableClass) -> LoewyPair:
    """Loewy structure of the canonical class c = (i, j).

    For i >= 1 the module has two radical layers: head R(i, j) and
    socle R(i-1, j).  For i = 0 the class is the simple D_j.
    """
    i, j = c
    if not 0 <= i <= ctx.p - 2:
        raise DomainError(f"class {c} is not canonical for p = {ctx.p}")
    if i == 0:
        return LoewyPair(head=(j,), socle=(), simple=True)
    return LoewyPair(head=r_set(ctx, i, j), socle=r_set(ctx, i - 1, j), simple=False)


def dim_simple(ctx: PrimeContext, j: int) -> int:
    """dim D_j = C(p-2, j)."""
    ctx.check_simple_index(j)
    return comb(ctx.p - 2, j)


def dim_class(ctx: PrimeContext, c: StableClass) -> int:
    """Dimension of the minimal module in the stable class c."""
    lw = loewy(ctx, c)
    return sum(dim_simple(ctx, t) for t in lw.head) + sum(
        dim_simple(ctx, t) for t in lw.socle
    )


def dim_projective(ctx: PrimeContext, t: int) -> int:
    """dim P_t from its radical layers D_t / D_{t-1} + D_{t+1} / D_t."""
    ctx.check_simple_index(t)

    def ds(k):
        return comb(ctx.p - 2, k) if 0 <= k <= ctx.p - 2 else 0

    return 2 * ds(t) + ds(t - 1) + ds(t + 1)


@dataclass(frozen=True)
class StableElement:
    """Integer linear combination of canonical stable classes."""

    ctx: PrimeContext
    coeffs: tuple[tuple[StableClass, int], ...]

    @staticmethod
    def make(ctx: PrimeContext, terms: Iterable[tuple[StableClass, int]]) -> "StableElement":
        acc: Counter = Counter()
        for c, m in terms:
            acc[c] += m
        items = tuple(
            (c, m) for c, m in sorted(acc.items(), key=lambda cm: (cm[0].shift, cm[0].j)) if m
        )
        return StableElement(ctx, items)

    @staticmethod
    def zero(ctx: PrimeContext) -> "StableElement":
        return StableElement(ctx, ())

    @staticmethod
    def basis(ctx: PrimeContext, shift: int, j: int) -> "StableElement":
        return StableElement.make(ctx, [(canonicalize(ctx, shift, j), 1)])

    def terms(self) -> tuple[tuple[StableClass, int], ...]:
        return self.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "StableElement") -> None:
        if self.ctx != other.ctx:
            raise DomainError(
                f"mixed primes {self.ctx.p} and {other.ctx.p} in ring arithmetic"
            )

    def __add__(self, other: "StableElement") -> "StableElement":
        self._check(other)
        return StableElement.make(self.ctx, self.coeffs + other.coeffs)

    def __sub__(self, other: "StableElement") -> "StableElement":
        return self + (-1) * other

    def __neg__(self) -> "StableElement":
        return (-1) * self

    def __rmul__(self, n: int) -> "StableElement":
        if not isinstance(n, int):
            return NotImplemented
        return StableElement.make(self.ctx, [(c, n * m) for c, m in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if isinstance(other, StableElement):
            return tensor(self, other)
        return NotImplemented

    def render(self) -> str:
        """Text form in expression syntax, e.g. 'D0 + 2 O^2(D1)'."""
        if not self.coeffs:
            return "0"
        parts = []
        for k, (c, m) in enumerate(self.coeffs):
            sign = "-" if m < 0 else "+"
            mag = abs(m)
            body = c.expr() if mag == 1 else f"{mag} {c.expr()}"
            if k == 0:
                parts.append(body if m > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "p": self.ctx.p,
            "terms": [
                {"shift": c.shift, "j": c.j, "mult": m} for c, m in self.coeffs
            ],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "StableElement":
        ctx = PrimeContext(int(data["p"]))
        return StableElement.make(
            ctx,
            [
                (canonicalize(ctx, int(t["shift"]), int(t["j"])), int(t["mult"]))
                for t in data["terms"]
            ],
        )


def tensor(e1: StableElement, e2: StableElement) -> StableElement:
    """Product in the stable Green ring, projectives discarded."""
    e1._check(e2)
    ctx = e1.ctx
    acc: Counter = Counter()
    for (k, i), m1 in e1.coeffs:
        for (l, j), m2 in e2.coeffs:
            for t in r_set(ctx, i, j):
                acc[canonicalize(ctx, k + l, t)] += m1 * m2
    return StableElement.make(ctx, acc.items())


def syzygy(e: StableElement, n: int) -> StableElement:
    """Apply the n-th syzygy shift (any integer n, negatives allowed)."""
    return StableElement.make(
        e.ctx, [(canonicalize(e.ctx, c.shift + n, c.j), m) for c, m in e.coeffs]
    )


def dual(e: StableElement) -> StableElement:
    """Linear dual: hooks are self-dual, so only the shift negates."""
    return StableElement.make(
        e.ctx, [(canonicalize(e.ctx, -c.shift, c.j), m) for c, m in e.coeffs]
    )


def min_resolution_term(ctx: PrimeContext, c: StableClass, n: int) -> tuple[int, ...]:
    """Labels t of the projectives P_t in degree n of the minimal resolution.

    The n-th term covers the n-th syzygy, so the multiset is the head of
    the canonical form of (shift + n, j).
    """
    if n < 0:
        raise DomainError(f"resolution degree {n} must be nonnegative")
    cn = canonicalize(ctx, c.shift + n, c.j)
    return loewy(ctx, cn).head


def ext_dim(ctx: PrimeContext, n: int, lam, mu) -> int:
    """dim Ext^n(S_lam, S_mu) for simples labeled by hook index or marker.

    Hook simples are labeled by their index in [0, p-2]; simples outside
    the principal block may be labeled by any other hashable marker and
    only contribute to n = 0 via equality.  For n >= 1 the answer is the
    multiplicity of D_mu in the head of the n-th syzygy of D_lam, which
    is 0 or 1.
    """
    if n < 0:
        raise DomainError(f"ext degree {n} must be nonnegative")
    for lab in (lam, mu):
        if isinstance(lab, int):
            ctx.check_simple_index(lab)
    if n == 0:
        return int(lam == mu)
    if not (isinstance(lam, int) and isinstance(mu, int)):
        return 0
    c = canonicalize(ctx, n, lam)
    return int(mu in loewy(ctx, c).head)


@dataclass(frozen=True)
class CensusEntry:
    label: str
    kind: str  # "stable" or "projective"
    dim: int
    head: tuple[int, ...]
    socle: tuple[int, ...]
    shift: int = 0
    j: int = 0

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "kind": self.kind,
            "dim": self.dim,
            "head": list(self.head),
            "socle": list(self.socle),
            "shift": self.shift,
            "j": self.j,
        }


def census(ctx: PrimeContext) -> list[CensusEntry]:
    """All p(p-1) canonical objects: (p-1)^2 stable classes, p-1 projectives.

    The triple (dim, head, socle) identifies each entry uniquely for the
    primes the oracle covers, which is what makes matrix-level
    identification by invariants sound.
    """
    entries = []
    for shift in range(ctx.p - 1):
        for j in range(ctx.p - 1):
            c = StableClass(shift, j)
            lw = loewy(ctx, c)
            entries.append(
                CensusEntry(
                    label=c.name(),
                    kind="stable",
                    dim=dim_class(ctx, c),
                    head=lw.head,
                    # a simple class has head = socle = {j}; the empty socle
                    # in LoewyPair is only a dimension-bookkeeping convention
                    socle=lw.head if lw.simple else lw.socle,
                    shift=shift,
                    j=j,
                )
            )
    for t in range(ctx.p - 1):
        entries.append(
            CensusEntry(
                label=f"P_{t}",
                kind="projective",
                dim=dim_projective(ctx, t),
                head=(t,),
                socle=(t,),
                shift=0,
                j=t,
            )
        )
    return entries


@dataclass(frozen=True)
class ArQuiver:
    """Auslander-Reiten quiver: canonical stable classes plus projectives.

    Stable arrows go (k, j) -> (k - 1, j') for j' adjacent to j, which is
    the arrow pattern forced by the almost split sequences ending in each
    vertex; each projective P_t sits between O^1(D_t) and O^{-1}(D_t).
    """

    ctx: PrimeContext
    stable_vertices: tuple[StableClass, ...]
    projective_vertices: tuple[int, ...]
    edges: tuple[tuple[str, str], ...]

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(c.name() for c in self.stable_vertices) + tuple(
            f"P_{t}" for t in self.projective_vertices
        )

    def mesh_symmetric(self) -> bool:
        """Check #(X -> Z) == #(tau Z -> X) with tau = O^2 on stable vertices."""
        ctx = self.ctx
        stable_names = {c.name(): c for c in self.stable_vertices}
        cnt = Counter(
            (u, v) for u, v in self.edges if u in stable_names and v in stable_names
        )
        for (u, v), n in cnt.items():
            z = stable_names[v]
            tau_z = canonicalize(ctx, z.shift + 2, z.j)
            if cnt[(tau_z.name(), u)] != n:
                return False
        return True

    def to_dot(self) -> str:
        lines = ["digraph ar_quiver {"]
        for c in self.stable_vertices:
            lines.append(f'  "{c.name()}";')
        for t in self.projective_vertices:
            lines.append(f'  "P_{t}" [shape=box];')
        for u, v in self.edges:
            lines.append(f'  "{u}" -> "{v}";')
        lines.append("}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "p": self.ctx.p,
            "stable_vertices": [c.name() for c in self.stable_vertices],
            "projective_vertices": [f"P_{t}" for t in self.projective_vertices],
            "edges": [[u, v] for u, v in self.edges],
        }


def ar_quiver(ctx: PrimeContext) -> ArQuiver:
    """Build the quiver on all canonical vertices of the principal block."""
    p = ctx.p
    stable = tuple(
        StableClass(shift, j) for shift in range(p - 1) for j in range(p - 1)
    )
    projective = tuple(range(p - 1))
    edges = []
    for c in stable:
        for jn in (c.j - 1, c.j + 1):
            if 0 <= jn <= p - 2:
                tgt = canonicalize(ctx, c.shift - 1, jn)
                edges.append((c.name(), tgt.name()))
    for t in projective:
        omega_t = canonicalize(ctx, 1, t)
        omega_inv_t = canonicalize(ctx, -1, t)
        edges.append((omega_t.name(), f"P_{t}"))
        edges.append((f"P_{t}", omega_inv_t.name()))
    return ArQuiver(
        ctx=ctx,
        stable_vertices=stable,
        projective_vertices=projective,
        edges=tuple(edges),
    )
