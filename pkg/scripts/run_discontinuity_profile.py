#!/usr/bin/env python3
"""Profile the Rayleigh jump at the all-ones corner.

Walks a rank-one path u(eps) with distinct coordinates toward sqrt(rho)*(1,..,1)
and prints the quotient at each step next to the value AT the corner matrix.
The path climbs to the threshold constant while the corner itself sits far
below it: the extreme critical value is not continuous there.
"""

import argparse

from entrywise.psd import discontinuity_probe
from entrywise.threshold import threshold_constant

EPSILONS = (0.3, 0.1, 0.03, 0.01, 0.003, 0.001, 0.0003)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=2)
    ap.add_argument("--M", type=int, default=2)
    ap.add_argument("--rho", type=float, default=1.0)
    args = ap.parse_args()

    c = (1.0,) * args.N
    probe = discontinuity_probe(c, args.M, args.N, args.rho, EPSILONS)
    print(f"{'eps':>10} {'rayleigh':>16}")
    for eps, value in probe.rows:
        print(f"{eps:>10.4g} {value:>16.10f}")
    constant = float(threshold_constant(c, args.M, args.N, args.rho))
    gap = abs(probe.limit_estimate - probe.on_point_value) / max(
        abs(probe.limit_estimate), abs(probe.on_point_value)
    )
    print(f"\npath limit estimate   {probe.limit_estimate:.10f}")
    print(f"threshold constant    {constant:.10f}")
    print(f"value at corner       {probe.on_point_value:.10f}")
    print(f"relative jump         {gap:.1%}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
