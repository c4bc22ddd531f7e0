"""Run the full benchmark matrix (4 experiments x 5 sizes x 3 algorithms)
and write the results CSV consumed by the plotting frontend.

Usage: python scripts/run_benchmark.py --out results.csv [--trials 10]
"""

import argparse
import sys

from wjs import bench


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results.csv")
    parser.add_argument("--experiments", default="1,2,3,4")
    parser.add_argument("--sizes", default="1000,5000,10000,50000,100000")
    parser.add_argument("--trials", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    experiments = [int(tok) for tok in args.experiments.split(",") if tok]
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]

    def progress(record):
        print(
            f"exp {record.experiment} {record.algorithm:>14} n {record.n:>7} "
            f"trial {record.trial}: {record.wall_seconds:.4f}s",
            file=sys.stderr,
        )

    records = bench.run_benchmark(
        experiments, sizes, args.trials, args.seed, progress=progress
    )
    with open(args.out, "w", newline="") as fh:
        rows = bench.write_csv(records, fh)
    print(f"wrote {rows} rows to {args.out}")


if __name__ == "__main__":
    main()
