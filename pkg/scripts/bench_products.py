#!/usr/bin/env python3
"""Compare blade-form and matrix-form geometric products and inversion.

For each non-degenerate signature up to --max-n, times the product of random
integer multivectors computed (a) directly on blade coefficients and (b) as
a 2^n x 2^n matrix product followed by first-row recovery, plus the exact
matrix inverse.

Usage: python scripts/bench_products.py [--max-n 5] [--reps 50] [--seed 0]
"""

import argparse
import random
import statistics
import time

from cliffrep import Multivector, Signature, mv_inverse, rep_multivector, unrep
from cliffrep.errors import ZeroDivisor


def timed(fn, pairs):
    out = []
    for args in pairs:
        t0 = time.perf_counter()
        fn(*args)
        out.append(time.perf_counter() - t0)
    return statistics.median(out) * 1e6


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--reps", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    print(f"{'signature':>10}  {'blade us':>10}  {'matrix us':>10}  {'inv us':>10}")
    for n in range(1, args.max_n + 1):
        for p in range(n, -1, -1):
            sig = Signature(p, n - p)
            pairs = [
                (Multivector.random(sig, rng), Multivector.random(sig, rng))
                for _ in range(args.reps)
            ]
            blade = timed(lambda u, v: u * v, pairs)
            matrix = timed(
                lambda u, v: unrep(sig, rep_multivector(u) @ rep_multivector(v)),
                pairs,
            )

            def inv(u, _v):
                try:
                    mv_inverse(u)
                except ZeroDivisor:
                    pass

            inverse = timed(inv, pairs)
            print(f"{str(sig):>10}  {blade:>10.1f}  {matrix:>10.1f}  {inverse:>10.1f}")


if __name__ == "__main__":
    main()
