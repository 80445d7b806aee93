"""Fit a minimal-degree robust polynomial on a grid, reduce it, and check NOR."""

import argparse
import json
from fractions import Fraction
from pathlib import Path

from andor.pipeline import RobustRegionSpec, thm31_reduce, verify_nor_approx
from andor.poly import write_poly
from andor.search import minimal_region_fit


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=Fraction, default=Fraction(6))
    ap.add_argument("--a", type=Fraction, default=Fraction(1, 3))
    ap.add_argument("--b", type=Fraction, default=Fraction(2, 3))
    ap.add_argument("--resolution", type=int, default=6)
    ap.add_argument("--out", type=Path, default=Path("reduce_demo_out"))
    args = ap.parse_args()
    spec = RobustRegionSpec(2, args.n, args.a, args.b)
    d, out, outcomes = minimal_region_fit(spec, args.resolution)
    print(f"grid-minimal degree {d} (margin {float(out.margin):.5f})")
    for o in outcomes[:-1]:
        print(f"  d={o.degree}: infeasible, certificate rows {len(o.certificate.entries)}")
    res = thm31_reduce(out.witness, spec, args.resolution)
    args.out.mkdir(parents=True, exist_ok=True)
    for i, (stage, poly) in enumerate(res.trace):
        write_poly(poly, args.out / f"{i}_{stage}.poly")
    nor = verify_nor_approx(res.final, res.arity, spec.alpha, spec.beta) if res.arity <= 20 else None
    summary = {"degree": d, "arity": res.arity, "final_degree": res.final.degree(),
               "nor_passed": None if nor is None else nor.passed}
    (args.out / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    print(json.dumps(summary, indent=2))


if __name__ == "__main__":
    main()
