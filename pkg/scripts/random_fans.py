"""Random complete rank-2 fans: compare the full pipeline (resolve, certify,
assemble) with the closed form, and tabulate torsion and chain statistics.

    python3 scripts/random_fans.py --count 500 --seed 1
"""

import argparse
import random
import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from oracles import gcd_of_minors, random_complete_fan  # noqa: E402

from toric_motives.motive import surface_closed_form, toric_surface_report  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-rays", type=int, default=8)
    ap.add_argument("--bound", type=int, default=10)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    index_hist, lines_hist = Counter(), Counter()
    mismatches = 0
    t0 = time.perf_counter()
    for _ in range(args.count):
        f = random_complete_fan(rng, args.max_rays, args.bound)
        rep = toric_surface_report(f)
        m = gcd_of_minors(list(f.rays), 2)
        if rep.motive != surface_closed_form(len(f.rays), m):
            mismatches += 1
            print("mismatch:", f, rep.motive)
        index_hist[m] += 1
        lines_hist[rep.resolution.exceptional.total_lines] += 1
    dt = time.perf_counter() - t0

    print(f"{args.count} fans, {mismatches} mismatches, {dt:.2f}s ({1000 * dt / args.count:.1f} ms/fan)")
    print("index m:", dict(sorted(index_hist.items())))
    print("exceptional lines:", dict(sorted(lines_hist.items())))
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
