"""Explicit syzygies: kernel of a minimal projective cover.

The head of M determines the cover ⊕_t P_t^{h_t} with h_t = dim
Hom(M, D_t).  A joint surjection is assembled greedily from hom bases
Hom(P_t, M): a candidate map is accepted when it enlarges the image in
the head of M, which is exactly independence of its multiplicity vector;
h_t accepted maps per t then give a cover that is surjective by
Nakayama's lemma, and surjectivity is still verified by a rank check.
Omega(M) is the kernel submodule of the cover.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..ffalg import kernel_basis, mat_mul, rank
from .homspace import hom_space
from .reps import DEFAULT_SEED, MatRep, direct_sum_rep, sub_rep


@dataclass(frozen=True)
class OmegaResult:
    rep: MatRep
    cover: tuple[int, ...]  # projective labels with multiplicity, ascending


def omega_rep(rep: MatRep, refs=None, seed: int = DEFAULT_SEED) -> OmegaResult:
    from .decompose import child_seed, reference_census

    ctx = rep.ctx
    q = ctx.p
    refs = refs or reference_census(q)
    n = rep.degree
    if n == 0:
        return OmegaResult(rep=rep, cover=())
    head_maps: list[np.ndarray] = []
    h = {}
    for t in range(q - 1):
        maps = hom_space(rep, refs.simples[t], seed=child_seed(seed, f"omh{t}"))
        h[t] = len(maps)
        head_maps.extend(maps)
    if not head_maps:
        raise DomainError(
            "module has no head inside the principal block; its syzygy is "
            "not tracked by this calculator"
        )
    head = np.vstack(head_maps) % q
    blocks: list[MatRep] = []
    cover: list[int] = []
    chosen_cols: list[np.ndarray] = []
    cur = np.zeros((head.shape[0], 0), dtype=np.int64)
    cur_rank = 0
    for t in range(q - 1):
        if h[t] == 0:
            continue
        proj = refs.projectives[t]
        cands = hom_space(proj, rep, seed=child_seed(seed, f"omc{t}"))
        taken = 0
        for phi in cands:
            if taken == h[t]:
                break
            trial = np.hstack([cur, mat_mul(head, phi, q)])
            r = rank(trial, q)
            if r > cur_rank:
                cur, cur_rank = trial, r
                blocks.append(proj)
                cover.append(t)
                chosen_cols.append(phi)
                taken += 1
        if taken != h[t]:
            raise AssertionError(
                f"could not assemble {h[t]} independent cover maps onto P_{t} heads"
            )
    cover_map = np.hstack(chosen_cols) % q
    if rank(cover_map, q) != n:
        raise AssertionError("projective cover map is not surjective")
    cover_rep = direct_sum_rep(blocks, ctx=ctx)
    ker = kernel_basis(cover_map, q)
    omega = sub_rep(cover_rep, ker)
    if omega.degree != cover_rep.degree - n:
        raise AssertionError("syzygy dimension bookkeeping failed")
    return OmegaResult(rep=omega, cover=tuple(cover))
