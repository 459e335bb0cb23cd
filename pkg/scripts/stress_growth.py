#!/usr/bin/env python3
"""Track pushforward-identity cost against fixed-point growth.

Runs the identity for a ladder of (n1, n2) on both surfaces at one spec and
prints fixed-point counts, insertion-basis sizes, and timings; useful for
deciding how far a desk run can push the sizes.

Usage: python scripts/stress_growth.py [--max-n1 3] [--seed N]
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from nestloc.combinatorics import multipartitions, nested_chains
from nestloc.integrals import (
    CoFactor,
    insertion_basis,
    integrate_ambient_batch,
    integrate_virtual_batch,
    sample_specs,
)
from nestloc.toric import p1xp1, p2


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n1", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1729)
    args = parser.parse_args()

    spec = sample_specs(args.seed, 1)[0]
    print(f"{'surface':8} {'sizes':8} {'pairs':>6} {'chains':>7} {'basis':>6} {'ms':>8}  verdict")
    for surface in (p2(), p1xp1()):
        for n1 in range(1, args.max_n1 + 1):
            for n2 in range(1, n1 + 1):
                sizes = (n1, n2)
                basis = insertion_basis(surface, sizes, n1 + n2)
                pairs = len(multipartitions(surface, n1)) * len(multipartitions(surface, n2))
                chains = len(nested_chains(surface, sizes))
                started = time.perf_counter()
                ambient = integrate_ambient_batch(
                    surface, sizes, basis, spec, [CoFactor(0, n1 + n2)]
                )
                virtual = integrate_virtual_batch(surface, sizes, basis, spec)
                elapsed = int((time.perf_counter() - started) * 1000)
                verdict = "pass" if ambient == virtual else "FAIL"
                print(
                    f"{surface.name:8} {str(sizes):8} {pairs:>6} {chains:>7}"
                    f" {len(basis):>6} {elapsed:>8}  {verdict}"
                )
    return 0


if __name__ == "__main__":
    sys.exit(main())
