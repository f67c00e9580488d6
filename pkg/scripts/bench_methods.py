#!/usr/bin/env python3
"""Time the triangulation and interpolation pipelines on random cones.

Prints one row per (d, n) cell with mean wall-clock seconds over the
requested trials; results always cross-checked for exact equality.

Usage: python scripts/bench_methods.py [--seed N] [--trials K] [--dims 2,3,4] [--max-extra 4]
"""

import argparse
import random
import sys
import time

from conefourier import pk_via_interpolation, pk_via_triangulation
from conefourier.sampling import sample_cone


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=5, help="cones per (d, n) cell")
    parser.add_argument("--dims", default="2,3,4")
    parser.add_argument("--max-extra", type=int, default=4)
    args = parser.parse_args()

    dims = [int(part) for part in args.dims.split(",") if part]
    rng = random.Random(args.seed)
    print(f"{'d':>2} {'n':>2} {'triangulation_s':>16} {'interpolation_s':>16} {'ratio':>7}")
    for d in dims:
        for extra in range(args.max_extra + 1):
            n = d + extra
            tri = interp = 0.0
            for _ in range(args.trials):
                cone = sample_cone(rng, d, n)
                start = time.perf_counter()
                a = pk_via_triangulation(cone)
                tri += time.perf_counter() - start
                start = time.perf_counter()
                b = pk_via_interpolation(cone)
                interp += time.perf_counter() - start
                if a != b:
                    print(f"pipeline mismatch at d={d} n={n}", file=sys.stderr)
                    return 1
            tri /= args.trials
            interp /= args.trials
            ratio = interp / tri if tri > 0 else float("inf")
            print(f"{d:>2} {n:>2} {tri:>16.6f} {interp:>16.6f} {ratio:>7.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
