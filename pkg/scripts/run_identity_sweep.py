#!/usr/bin/env python3
"""Exact-arithmetic sweep of all four determinantal identities.

Every case is evaluated over Gaussian rationals, so a zero failure count
means the identities held on the nose, not up to rounding.
"""

import argparse
import time

from entrywise.experiments import IDENTITY_KINDS, IdentitySuiteConfig, run_identity_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=50, help="random draws per (N, M) cell")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    total_cases = 0
    total_failures = 0
    for which in IDENTITY_KINDS:
        t0 = time.perf_counter()
        out = run_identity_suite(
            IdentitySuiteConfig(which=which, trials=args.trials, seed=args.seed)
        )
        dt = time.perf_counter() - t0
        total_cases += out["cases"]
        total_failures += out["failures"]
        print(f"{which:<14} cases={out['cases']:<6} failures={out['failures']:<3} ({dt:.2f}s)")
        if out.get("counterexample"):
            print(f"  counterexample: {out['counterexample']}")
    print(f"{'total':<14} cases={total_cases:<6} failures={total_failures}")
    return 0 if total_failures == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
