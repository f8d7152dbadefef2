"""Run a census and write it as JSON lines plus a summary file.

    python scripts/run_census.py --n 3 --out runs/n3
    python scripts/run_census.py --n 4 --rnd --budget 200000000000 --jobs 4 --out runs/n4
"""

import argparse
import json
import time
from pathlib import Path

from ybtruss import io
from ybtruss.census import DEFAULT_BUDGET, SearchSpec, enumerate_solutions


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rnd", action="store_true")
    p.add_argument("--bijective", action="store_true")
    p.add_argument("--involutive", action="store_true")
    p.add_argument("--dedup", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True, help="path prefix; writes PREFIX.jsonl and PREFIX.summary.json")
    args = p.parse_args()

    spec = SearchSpec(args.n, require_rnd=args.rnd, require_bijective=args.bijective,
                      require_involutive=args.involutive, dedup=args.dedup, budget=args.budget, jobs=args.jobs)
    t0 = time.perf_counter()
    res = enumerate_solutions(spec)
    elapsed = time.perf_counter() - t0

    prefix = Path(args.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    with open(f"{prefix}.jsonl", "w") as fh:
        for S in res.solutions:
            fh.write(io.dumps(S) + "\n")
    summary = dict(res.summary, candidates=res.candidates, seconds=round(elapsed, 3))
    Path(f"{prefix}.summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    print(json.dumps(summary, sort_keys=True))


if __name__ == "__main__":
    main()
