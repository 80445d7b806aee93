"""Approximate degree of OR_n for a range of n, with the sqrt(n) window."""

import argparse
import json
from fractions import Fraction

from andor.adeg import OR, ApproxSpec, approx_degree, symmetric_reduce_lp, theta_sqrt_check


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--full", action="store_true", help="multivariate LP instead of Hamming weights")
    args = ap.parse_args()
    spec = ApproxSpec(Fraction(1, 3), Fraction(2, 3))
    solver = None if args.full else symmetric_reduce_lp
    results = []
    for n in range(1, args.max_n + 1):
        r = approx_degree(OR(n), spec, solver=solver)
        results.append((n, r.degree))
        print(f"n={n:3d}  degree={r.degree}")
    print(json.dumps(theta_sqrt_check(results), indent=2))


if __name__ == "__main__":
    main()
