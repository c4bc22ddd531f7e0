"""Acceptance criteria, one test per criterion.

Each test exercises the stated population at the stated tolerances and
records a single pass/fail line, echoed in the "acceptance criteria"
section after the pytest summary.
"""

import gc
import math
import statistics
import time

from wjs import generators
from wjs.bench import LINEAR_STRATEGY, trial_seed
from wjs.oracle import exhaustive_max_weight, quadratic_dp_max_weight
from wjs.predecessor import (
    SweepStats,
    compute_predecessors_gpi,
    compute_predecessors_parallel,
    find_predecessor_binary,
)
from wjs.solver import end_sort_expand, solve_classical, solve_gpi, start_sort
from wjs.sortkeys import (
    Bucket,
    Comparison,
    Counting,
    RadixLSD,
    SpreadsortHybrid,
    StrategyInapplicableError,
)

from conftest import WORKED_JOBS, WORKED_P, WORKED_PI, make_rng, random_instance, \
    record_acceptance


def _finish(name, failures, detail=""):
    record_acceptance(name, not failures, detail)
    assert not failures, f"{name}: " + "; ".join(failures[:5])


# --- 1. golden fixtures ------------------------------------------------------

def test_golden_fixtures():
    failures = []
    end_ordered, _ = end_sort_expand(WORKED_JOBS, Comparison())
    labeled = [(j.start, j.end) for j in end_ordered]
    expect = [(0.5, 2.0), (3.0, 6.0), (5.0, 6.5), (0.0, 9.0), (7.0, 9.0)]
    if labeled != expect:
        failures.append(f"end-order labeling {labeled} != {expect}")
    pi = start_sort(end_ordered).end_orders()
    if pi != WORKED_PI:
        failures.append(f"start->end permutation {pi} != {WORKED_PI}")
    p = compute_predecessors_gpi(end_ordered, start_sort(end_ordered))
    if p != WORKED_P:
        failures.append(f"predecessor table {p} != {WORKED_P}")
    _finish("golden fixtures (worked five-job example, exact)", failures)


# --- 2. oracle equivalence ---------------------------------------------------

def _weights_close(a, b, int_weights):
    if int_weights:
        return a == b
    return math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-12)


def test_oracle_equivalence():
    failures = []
    rng = make_rng(20260824)
    instances = 0
    for trial in range(1000):
        n = rng.randint(0, 12)
        float_times = trial % 2 == 1
        int_weights = trial % 4 < 2
        jobs = random_instance(rng, n, float_times=float_times,
                               time_range=(0, 15), int_weights=int_weights)
        reference = exhaustive_max_weight(jobs)
        candidates = [("quadratic", quadratic_dp_max_weight(jobs))]
        strategies = [Comparison(), Counting(), RadixLSD(), Bucket(),
                      SpreadsortHybrid()]
        for strategy in strategies:
            try:
                candidates.append(
                    (f"classical/{strategy}", solve_classical(jobs, strategy).max_weight))
                candidates.append(
                    (f"gpi/{strategy}", solve_gpi(jobs, strategy).max_weight))
            except StrategyInapplicableError:
                continue  # counting sort on float times
        for label, value in candidates:
            if not _weights_close(value, reference, int_weights):
                failures.append(
                    f"trial {trial} ({label}): {value!r} != {reference!r}")
        instances += 1
    _finish("oracle equivalence (>=1000 instances, n<=12)", failures,
            f"{instances} instances")


# --- 3. predecessor differential --------------------------------------------

def test_predecessor_differential():
    failures = []
    rng = make_rng(31337)
    sizes = [rng.randint(0, 300) for _ in range(185)] + \
        [rng.randint(1000, 5000) for _ in range(15)]
    for trial, n in enumerate(sizes):
        jobs = random_instance(rng, n, float_times=trial % 2 == 0,
                               time_range=(0, max(3 * n // 2, 10)))
        end_ordered, _ = end_sort_expand(jobs)
        start_ordered = start_sort(end_ordered)
        stats = SweepStats()
        p = compute_predecessors_gpi(end_ordered, start_ordered, stats=stats)
        binary = [find_predecessor_binary(end_ordered, i)
                  for i in range(1, n + 1)]
        if p != binary:
            failures.append(f"trial {trial}: GPI table != binary table")
        in_start_order = [p[i - 1] for i in start_ordered.end_orders()]
        if any(a > b for a, b in zip(in_start_order, in_start_order[1:])):
            failures.append(f"trial {trial}: monotonicity violated")
        if stats.inner_decrements > n:
            failures.append(
                f"trial {trial}: {stats.inner_decrements} inner decrements > n={n}")
    _finish("predecessor differential (>=200 instances, n<=5000)", failures,
            f"{len(sizes)} instances")


# --- 4. parallel determinism -------------------------------------------------

def test_parallel_determinism():
    failures = []
    rng = make_rng(777)
    sizes = [rng.randint(0, 200) for _ in range(88)] + \
        [rng.randint(2000, 10000) for _ in range(12)]
    for trial, n in enumerate(sizes):
        jobs = random_instance(rng, n, float_times=trial % 2 == 0,
                               time_range=(0, max(n, 10)))
        end_ordered, _ = end_sort_expand(jobs)
        start_ordered = start_sort(end_ordered)
        sequential = compute_predecessors_gpi(end_ordered, start_ordered)
        for workers in (1, 2, 4, 8):
            parallel = compute_predecessors_parallel(
                end_ordered, start_ordered, workers)
            if parallel != sequential:
                failures.append(
                    f"trial {trial} workers={workers}: mismatch")
    _finish("parallel determinism (workers 1/2/4/8, >=100 instances)", failures,
            f"{len(sizes)} instances")


# --- 5 & 6. timed criteria ---------------------------------------------------

def _timed_solve(jobs, algo, experiment):
    gc.collect()
    t0 = time.perf_counter()
    if algo == "classical":
        solve_classical(jobs)
    elif algo == "gpi_comparison":
        solve_gpi(jobs)
    else:
        solve_gpi(jobs, LINEAR_STRATEGY[experiment])
    return time.perf_counter() - t0


def _mean_times(experiment, n, algos, trials=10, base_seed=0):
    """Trial-averaged wall time per algorithm, interleaved per instance."""
    warm = generators.generate(experiment, n, trial_seed(base_seed, experiment, n, trials))
    for algo in algos:
        _timed_solve(warm, algo, experiment)
    samples = {algo: [] for algo in algos}
    for trial in range(trials):
        jobs = generators.generate(
            experiment, n, trial_seed(base_seed, experiment, n, trial))
        for algo in algos:
            samples[algo].append(_timed_solve(jobs, algo, experiment))
    return {algo: statistics.mean(ts) for algo, ts in samples.items()}


def test_scaling_shape():
    failures = []
    details = []
    for experiment in (1, 4):
        per_job = {}
        for n in (10_000, 100_000):
            means = _mean_times(experiment, n, ("classical", "gpi_linear"))
            per_job[n] = {algo: t / n for algo, t in means.items()}
        ratio = {
            algo: per_job[100_000][algo] / per_job[10_000][algo]
            for algo in ("classical", "gpi_linear")
        }
        details.append(
            f"exp{experiment} gpi_linear {ratio['gpi_linear']:.3f} "
            f"classical {ratio['classical']:.3f}")
        if ratio["gpi_linear"] > 1.5:
            failures.append(
                f"exp{experiment}: gpi_linear per-job ratio "
                f"{ratio['gpi_linear']:.3f} > 1.5")
        if ratio["classical"] <= ratio["gpi_linear"]:
            failures.append(
                f"exp{experiment}: classical ratio {ratio['classical']:.3f} "
                f"not above gpi_linear {ratio['gpi_linear']:.3f}")
    _finish("scaling shape (exp 1&4, per-job t(100k)/t(10k))", failures,
            "; ".join(details))


def test_practical_speedup():
    failures = []
    details = []
    n = 100_000
    for experiment in (1, 2, 3, 4):
        means = _mean_times(experiment, n, ("classical", "gpi_comparison"))
        speedup = means["classical"] / means["gpi_comparison"]
        details.append(f"exp{experiment} {speedup:.2f}x")
        if means["gpi_comparison"] > means["classical"]:
            failures.append(
                f"exp{experiment}: gpi_comparison {means['gpi_comparison']:.3f}s "
                f"slower than classical {means['classical']:.3f}s")
    _finish("practical speedup (n=100k, gpi_comparison <= classical, target 1.2x)",
            failures, "; ".join(details))
