"""Layer combinatorics for hook representations of Sigma_p in characteristic p.

Everything downstream reduces to one rectangle of integers per pair
(i, j): row i holds the simple labels appearing in the i-th radical
layer of the i-th syzygy picture attached to D_j.  The rectangle is
described by four numbers, computed here in closed form:

    a(i, j) = j - i          if i <= j        else i - j - 1
    b(i, j) = j + i          if i <= p - 2 - j else 2p - j - 3 - i
    l(i, j) = a + [i > j]
    r(i, j) = b - [i > p - 2 - j]

The head label set R(i, j) = {l, l+2, ..., r} drives the tensor product
structure constants, Loewy layers, and minimal resolutions.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError

MAX_PRIME = 10**6


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime p together with the derived constants used everywhere.

    The period of the syzygy operator is 2p - 2 and the principal block
    has p - 1 simple modules D_0, ..., D_{p-2}.
    """

    p: int

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int):
            raise DomainError(f"p must be an integer, got {p!r}")
        if p == 2:
            raise DomainError(
                "p = 2 is excluded: Sigma_2 has a single simple module and "
                "the layer combinatorics below degenerate"
            )
        if p > MAX_PRIME:
            raise DomainError(f"p = {p} exceeds the supported bound {MAX_PRIME}")
        if not _is_prime(p):
            raise DomainError(f"p = {p} is not prime")

    @property
    def period(self) -> int:
        return 2 * self.p - 2

    @property
    def n_simples(self) -> int:
        return self.p - 1

    def check_simple_index(self, j: int) -> None:
        if not 0 <= j <= self.p - 2:
            raise DomainError(f"simple index {j} outside [0, {self.p - 2}] for p = {self.p}")


@dataclass(frozen=True)
class RectProfile:
    """Bounds of one layer rectangle: outer [a, b], head window [l, r]."""

    i: int
    j: int
    a: int
    b: int
    l: int
    r: int


def rect_bounds(ctx: PrimeContext, i: int, j: int) -> tuple[int, int]:
    """Outer bounds (a, b) of the rectangle at position (i, j).

    Defined for i in [0, p-1]; the i = p-1 row exists for the Specht
    filtration identities even though no head window is attached to it.
    """
    p = ctx.p
    if not 0 <= i <= p - 1:
        raise DomainError(f"row index {i} outside [0, {p - 1}] for p = {p}")
    ctx.check_simple_index(j)
    a = j - i if i <= j else i - j - 1
    b = j + i if i <= p - 2 - j else 2 * p - j - 3 - i
    return a, b


def layer_ends(ctx: PrimeContext, i: int, j: int) -> tuple[int, int]:
    """Head window (l, r) at position (i, j); requires i in [0, p-2]."""
    p = ctx.p
    if not 0 <= i <= p - 2:
        raise DomainError(f"row index {i} outside [0, {p - 2}] for p = {p}")
    a, b = rect_bounds(ctx, i, j)
    l = a + (1 if i > j else 0)
    r = b - (1 if i > p - 2 - j else 0)
    return l, r


def rect_profile(ctx: PrimeContext, i: int, j: int) -> RectProfile:
    """Full profile (a, b, l, r) at (i, j) for i in [0, p-2]."""
    a, b = rect_bounds(ctx, i, j)
    l, r = layer_ends(ctx, i, j)
    return RectProfile(i=i, j=j, a=a, b=b, l=l, r=r)


@lru_cache(maxsize=None)
def _r_set(p: int, i: int, j: int) -> tuple[int, ...]:
    ctx = PrimeContext(p)
    l, r = layer_ends(ctx, i, j)
    return tuple(range(l, r + 1, 2))


def r_set(ctx: PrimeContext, i: int, j: int) -> tuple[int, ...]:
    """Head label set R(i, j) = {l, l+2, ..., r}, increasing.

    R(i, j) indexes both the simple summands of the stable tensor
    product D_i (x) D_j and the i-th head layer attached to D_j.  The
    memo table is keyed by (p, i, j) and read-only after first fill.
    """
    if not 0 <= i <= ctx.p - 2:
        raise DomainError(f"row index {i} outside [0, {ctx.p - 2}] for p = {ctx.p}")
    ctx.check_simple_index(j)
    return _r_set(ctx.p, i, j)


def s_factors(ctx: PrimeContext, i: int) -> tuple[int, ...]:
    """Composition factor labels of the hook Specht module S_i, head last.

    S_0 and S_{p-1} are the simple ends D_0 and D_{p-2}; for i in
    [1, p-2] the module is uniserial with socle D_{i-1} and head D_i.
    """
    p = ctx.p
    if not 0 <= i <= p - 1:
        raise DomainError(f"Specht index {i} outside [0, {p - 1}] for p = {p}")
    if i == 0:
        return (0,)
    if i == p - 1:
        return (p - 2,)
    return (i - 1, i)
