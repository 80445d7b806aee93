"""Degree sweep for the unit-box robust conditions, stopping at the LP guard."""

import argparse

from andor.adeg import GuardExceeded
from andor.search import problem41_search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--max-d", type=int, default=6)
    ap.add_argument("--resolution", type=int, default=6)
    ap.add_argument("--guard", type=int, default=2000)
    ap.add_argument("--certify-depth", type=int, default=8)
    args = ap.parse_args()
    for m in range(1, args.max_m + 1):
        for d in range(1, args.max_d + 1):
            try:
                _, rep = problem41_search(m, d, args.resolution, args.guard, args.certify_depth)
            except GuardExceeded as exc:
                print(f"m={m} d={d}: guard exhausted ({exc})")
                break
            extra = rep.get("contradiction") or rep.get("grid_margin")
            print(f"m={m} d={d}: {rep['status']} ({extra})")
            if rep["status"] == "certified":
                break


if __name__ == "__main__":
    main()
