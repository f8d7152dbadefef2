"""Table of dim R_2 over bijective non-degenerate solutions, serial and parallel."""

import argparse
import json

from ybtruss.census import audit_involutive_dim


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--jobs", type=int, default=2)
    args = p.parse_args()
    for n in range(1, args.max_n + 1):
        serial = audit_involutive_dim(n, jobs=1)
        parallel = audit_involutive_dim(n, jobs=args.jobs)
        if serial != parallel:
            raise SystemExit(f"n={n}: serial and parallel audits differ")
        print(json.dumps(serial, sort_keys=True))


if __name__ == "__main__":
    main()
