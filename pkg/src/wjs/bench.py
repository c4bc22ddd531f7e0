"""Benchmark harness: timed end-to-end solves over generated instances,
one CSV row per (experiment, algorithm, n, trial).

The timed region covers sorting, predecessor computation, DP, and
backtracking; instance generation and CSV output stay outside it.
"""

from __future__ import annotations

import csv
import gc
import time
from dataclasses import dataclass

import numpy as np

from . import generators, solver
from .core import read_jobs, validate_instance
from .sortkeys import Bucket, Comparison, RadixLSD, SpreadsortHybrid

CSV_HEADER = ["experiment", "algorithm", "n", "trial", "seed",
              "wall_seconds", "per_job_seconds"]

ALGORITHMS = ("classical", "gpi_comparison", "gpi_linear")

# linear-sort choice per experiment: bounded integers -> radix, skewed /
# clustered floats -> spreadsort, wide uniform floats -> bucket
LINEAR_STRATEGY = {
    1: RadixLSD(),
    2: SpreadsortHybrid(),
    3: SpreadsortHybrid(),
    4: Bucket(),
}


@dataclass
class BenchRecord:
    experiment: int
    algorithm: str
    n: int
    trial: int
    seed: int
    wall_seconds: float
    per_job_seconds: float


class BenchmarkMismatchError(RuntimeError):
    """Two algorithms disagreed on max_weight for the same instance."""


def trial_seed(base_seed, experiment, n, trial):
    """Deterministic per-trial seed, recorded in the CSV for replay."""
    ss = np.random.SeedSequence([base_seed, experiment, n, trial])
    return int(ss.generate_state(1)[0])


def _solve(algorithm, experiment, jobs):
    if algorithm == "classical":
        return solver.solve_classical(jobs, Comparison())
    if algorithm == "gpi_comparison":
        return solver.solve_gpi(jobs, Comparison())
    if algorithm == "gpi_linear":
        return solver.solve_gpi(jobs, LINEAR_STRATEGY[experiment])
    raise ValueError(f"unknown algorithm {algorithm!r}")


def run_benchmark(experiments, sizes, trials, base_seed,
                  algorithms=ALGORITHMS, progress=None):
    """Yield one BenchRecord per (experiment, n, trial, algorithm).

    All algorithms are timed on the identical pre-materialized instance and
    must agree on max_weight; a disagreement aborts the run.
    """
    if not sizes:
        raise ValueError("sizes must be non-empty")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    for experiment in experiments:
        if experiment not in LINEAR_STRATEGY:
            raise ValueError(f"unknown experiment {experiment}")
    for algorithm in algorithms:
        if algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algorithm!r}")

    for experiment in experiments:
        for n in sizes:
            # untimed warmup per (algorithm, size)
            warm = generators.generate(
                experiment, n, trial_seed(base_seed, experiment, n, trials)
            )
            for algorithm in algorithms:
                _solve(algorithm, experiment, warm)
            for trial in range(trials):
                seed = trial_seed(base_seed, experiment, n, trial)
                jobs = generators.generate(experiment, n, seed)
                reference = None
                for algorithm in algorithms:
                    gc.collect()
                    t0 = time.perf_counter()
                    solution = _solve(algorithm, experiment, jobs)
                    wall = time.perf_counter() - t0
                    if reference is None:
                        reference = solution.max_weight
                    elif solution.max_weight != reference:
                        raise BenchmarkMismatchError(
                            f"exp {experiment} n {n} trial {trial}: "
                            f"{algorithm} got {solution.max_weight!r}, "
                            f"expected {reference!r}"
                        )
                    record = BenchRecord(
                        experiment, algorithm, n, trial, seed,
                        wall, wall / n if n else 0.0,
                    )
                    if progress is not None:
                        progress(record)
                    yield record


def write_csv(records, stream):
    writer = csv.writer(stream)
    writer.writerow(CSV_HEADER)
    count = 0
    for r in records:
        writer.writerow([
            r.experiment, r.algorithm, r.n, r.trial, r.seed,
            format(r.wall_seconds, ".9g"), format(r.per_job_seconds, ".9g"),
        ])
        count += 1
    return count


def solve_file(path, algorithm, strategy):
    """Solve a job CSV file; returns (solution, jobs)."""
    jobs = validate_instance(read_jobs(path))
    if algorithm == "classical":
        solution = solver.solve_classical(jobs, strategy)
    elif algorithm == "gpi":
        solution = solver.solve_gpi(jobs, strategy)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return solution, jobs
