"""Compare the pure numpy and compiled kernels on representative shapes.

Run from the repository root:

    python3 benchmarks/bench_ffcore.py [--repeats N]

The shapes mirror the hot paths: tensor-product generator products
(square mat_mul), the big one-shot echelon reduction behind hom-space
computations, and a tall stripe system like the ones solved when
splitting endomorphism rings.
"""

import argparse
import time

import numpy as np

from greenp.ffalg import _pure

try:
    from greenp.ffalg import _core
except ImportError:
    _core = None


def _timeit(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cases(rng, q):
    a300 = rng.integers(0, q, size=(300, 300), dtype=np.int64)
    b300 = rng.integers(0, q, size=(300, 300), dtype=np.int64)
    tall = rng.integers(0, q, size=(1500, 1430), dtype=np.int64)
    # stripe system: many small blocks stacked, low rank per stripe
    stripes = []
    for _ in range(30):
        block = rng.integers(0, q, size=(8, 50), dtype=np.int64)
        stripes.append(np.vstack([block, block]))  # forced dependencies
    stripe = np.vstack(stripes)
    return [
        ("mat_mul 300x300", lambda impl: impl.mat_mul(a300, b300, q)),
        ("rref 1500x1430", lambda impl: impl.rref(tall, q)),
        (f"rref stripes {stripe.shape[0]}x{stripe.shape[1]}",
         lambda impl: impl.rref(stripe, q)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--q", type=int, default=7, help="field order")
    args = ap.parse_args()

    rng = np.random.default_rng(0x5EED)
    print(f"field GF({args.q}), best of {args.repeats}")
    header = f"{'case':<28} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, call in _cases(rng, args.q):
        t_pure = _timeit(lambda: call(_pure), args.repeats)
        if _core is None:
            print(f"{label:<28} {t_pure * 1e3:>8.1f}ms {'n/a':>10} {'':>8}")
            continue
        t_core = _timeit(lambda: call(_core), args.repeats)
        # same outputs, same shapes; parity is covered by the test suite
        print(
            f"{label:<28} {t_pure * 1e3:>8.1f}ms {t_core * 1e3:>8.1f}ms "
            f"{t_pure / t_core:>7.1f}x"
        )
    if _core is None:
        print("compiled core not built; showing pure backend only")


if __name__ == "__main__":
    main()
