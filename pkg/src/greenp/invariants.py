"""Tensor-growth invariants of stable classes.

The growth rate gamma(M) = lim dim_core(M^{(x)n})^{1/n} of a stable
class is a quotient of sines: restricting to a Sylow p-subgroup C_p
sends the minimal module of the class (shift, j) to a direct sum of
Jordan blocks that is, up to free summands, a single block J_{j+1} for
even j and J_{p-j-1} for odd j, and

    gamma(C_p, J_k) = sin(k pi / p) / sin(pi / p).

Both block sizes give the same value, so gamma depends only on the sine
index j + 1 taken modulo the flip k ~ p - k.  Values are kept exact as
sine indices and only converted to float on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .diagram import PrimeContext
from .errors import DomainError
from .stable_ring import StableClass, StableElement


@dataclass(frozen=True)
class GammaValue:
    """gamma as an exact sine quotient sin(k pi/p) / sin(pi/p).

    Instances compare equal under the k ~ p - k identification, which is
    an exact identity of sines.
    """

    p: int
    sine_index: int

    def __post_init__(self):
        if not 1 <= self.sine_index <= self.p - 1:
            raise DomainError(
                f"sine index {self.sine_index} outside [1, {self.p - 1}] for p = {self.p}"
            )

    def __eq__(self, other):
        if not isinstance(other, GammaValue):
            return NotImplemented
        if self.p != other.p:
            return False
        return self.sine_index in (other.sine_index, other.p - other.sine_index)

    def __hash__(self):
        return hash((self.p, min(self.sine_index, self.p - self.sine_index)))

    def value(self) -> float:
        return math.sin(self.sine_index * math.pi / self.p) / math.sin(math.pi / self.p)

    def to_json_dict(self) -> dict:
        return {"sine_index": self.sine_index, "p": self.p, "value": self.value()}


def gamma_cp(ctx: PrimeContext, k: int) -> GammaValue:
    """gamma of the Jordan block J_k as a C_p-module, 1 <= k <= p - 1.

    J_p is free, hence gamma 0 by convention; it has no sine index and is
    rejected here with a message naming the convention.
    """
    if k == ctx.p:
        raise DomainError(
            f"J_{k} is free over C_{ctx.p}; its gamma is 0 by convention and "
            "has no sine index"
        )
    if not 1 <= k <= ctx.p - 1:
        raise DomainError(f"Jordan block size {k} outside [1, {ctx.p}] for p = {ctx.p}")
    return GammaValue(ctx.p, k)


def restriction_jordan_stable(ctx: PrimeContext, j: int) -> tuple[int, ...]:
    """Non-free Jordan block sizes of D_j restricted to C_p.

    A single block remains: size j + 1 for even j, p - j - 1 for odd j.
    """
    ctx.check_simple_index(j)
    return (j + 1,) if j % 2 == 0 else (ctx.p - j - 1,)


def gamma_class(ctx: PrimeContext, c: StableClass) -> GammaValue:
    """gamma of a stable class; syzygies do not change it.

    The value is sin((j+1) pi/p)/sin(pi/p), the nonnegative branch: for
    odd j the restriction block is J_{p-j-1} and sin((p-j-1) pi/p) =
    sin((j+1) pi/p) exactly.
    """
    ctx.check_simple_index(c.j)
    return GammaValue(ctx.p, c.j + 1)


def gamma_element(e: StableElement) -> float:
    """gamma extended additively to nonnegative combinations of classes."""
    total = 0.0
    for c, m in e.terms():
        if m < 0:
            raise DomainError(
                "gamma is defined for genuine modules; negative multiplicities "
                f"appear in {e.render()}"
            )
        total += m * gamma_class(e.ctx, c).value()
    return total
