"""Command-line interface: solve job files, generate instances, run the
benchmark matrix, and demonstrate the segmented parallel predecessor pass.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import bench, generators
from .core import JobFileError, MalformedJobError, MixedNumericKindError, write_jobs
from .predecessor import compute_predecessors_gpi, compute_predecessors_parallel
from .sortkeys import StrategyInapplicableError, strategy_from_name
from .solver import end_sort_expand, start_sort


def _parse_int_list(text):
    return [int(tok) for tok in text.split(",") if tok]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wjs", description="Weighted job scheduling solver and benchmarks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a job CSV file")
    p.add_argument("--input", required=True)
    p.add_argument("--algo", choices=["classical", "gpi"], default="gpi")
    p.add_argument(
        "--sort",
        choices=["comparison", "counting", "radix", "bucket", "spreadsort"],
        default="comparison",
    )

    p = sub.add_parser("gen", help="generate a benchmark instance file")
    p.add_argument("--experiment", type=int, required=True, choices=[1, 2, 3, 4])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("bench", help="run the benchmark matrix, write CSV")
    p.add_argument("--experiments", default="1,2,3,4")
    p.add_argument("--sizes", default="1000,5000,10000,50000,100000")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser(
        "pred-parallel",
        help="verify segmented parallel predecessors match sequential",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, required=True)
    p.add_argument("--experiment", type=int, default=1, choices=[1, 2, 3, 4])
    p.add_argument("--seed", type=int, default=0)
    return parser


def cmd_solve(args):
    try:
        solution, jobs = bench.solve_file(
            args.input, args.algo, strategy_from_name(args.sort)
        )
    except (JobFileError, MalformedJobError, MixedNumericKindError,
            StrategyInapplicableError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"max_weight {solution.max_weight!r}")
    print(f"chosen {len(solution.chosen)} job(s):")
    for end_order in solution.chosen:
        pos = solution.input_positions[end_order - 1]
        job = jobs[pos]
        print(
            f"  input_line {pos + 2} end_order {end_order} "
            f"start {job.start!r} end {job.end!r} weight {job.weight!r}"
        )
    return 0


def cmd_gen(args):
    jobs = generators.generate(args.experiment, args.n, args.seed)
    write_jobs(args.out, jobs)
    print(f"wrote {len(jobs)} jobs to {args.out}")
    return 0


def cmd_bench(args):
    experiments = _parse_int_list(args.experiments)
    sizes = _parse_int_list(args.sizes)

    def progress(record):
        print(
            f"exp {record.experiment} {record.algorithm:>14} n {record.n:>7} "
            f"trial {record.trial}: {record.wall_seconds:.4f}s",
            file=sys.stderr,
        )

    try:
        records = bench.run_benchmark(
            experiments, sizes, args.trials, args.seed, progress=progress
        )
        with open(args.out, "w", newline="") as fh:
            rows = bench.write_csv(records, fh)
    except (ValueError, bench.BenchmarkMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {rows} rows to {args.out}")
    return 0


def cmd_pred_parallel(args):
    jobs = generators.generate(args.experiment, args.n, args.seed)
    end_ordered, _ = end_sort_expand(jobs, strategy_from_name("comparison"))
    start_ordered = start_sort(end_ordered)

    t0 = time.perf_counter()
    sequential = compute_predecessors_gpi(end_ordered, start_ordered)
    t_seq = time.perf_counter() - t0

    t0 = time.perf_counter()
    parallel = compute_predecessors_parallel(end_ordered, start_ordered, args.workers)
    t_par = time.perf_counter() - t0

    match = sequential == parallel
    print(f"n {args.n} workers {args.workers}")
    print(f"sequential {t_seq:.6f}s  parallel {t_par:.6f}s  match {match}")
    if not match:
        print("error: parallel result differs from sequential", file=sys.stderr)
        return 1
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = {
        "solve": cmd_solve,
        "gen": cmd_gen,
        "bench": cmd_bench,
        "pred-parallel": cmd_pred_parallel,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
