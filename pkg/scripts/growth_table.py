"""Graded dimensions and growth estimates across the left non-degenerate census."""

import argparse
import csv
import sys
from collections import Counter

from ybtruss.census import SearchSpec, enumerate_solutions
from ybtruss.monoid import estimate_from_dims, grow_classes
from ybtruss.solution import classify


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--dmax", type=int, default=8)
    p.add_argument("--rows", action="store_true", help="one CSV row per isomorphism class")
    args = p.parse_args()

    sols = enumerate_solutions(SearchSpec(args.n, dedup=True)).solutions
    hist = Counter()
    out = csv.writer(sys.stdout)
    if args.rows:
        out.writerow(["index", "involutive", "bijective", "estimate", "dims"])
    for i, S in enumerate(sols):
        dims = grow_classes(S, args.dmax).dims
        k = estimate_from_dims(dims, args.dmax)
        f = classify(S)
        hist[k] += 1
        if args.rows:
            out.writerow([i, int(f.involutive), int(f.bijective), k, " ".join(map(str, dims))])
    print(f"# n={args.n} classes={len(sols)} estimate histogram {dict(sorted(hist.items()))}", file=sys.stderr)


if __name__ == "__main__":
    main()
