"""Walk through the worked five-job example: end-order labeling, the
start-order permutation, the predecessor table from the two-pointer pass,
the DP values, and the recovered optimal set.

Usage: python scripts/worked_example.py
"""

from wjs import Job
from wjs.predecessor import SweepStats, compute_predecessors_gpi
from wjs.solver import backtrack, dp_from_predecessors, end_sort_expand, start_sort

JOBS = [
    Job(0.5, 2.0, 1.0),
    Job(3.0, 6.0, 1.0),
    Job(5.0, 6.5, 1.0),
    Job(0.0, 9.0, 1.0),
    Job(7.0, 9.0, 1.0),
]


def main():
    end_ordered, _ = end_sort_expand(JOBS)
    print("end-ordered jobs (end_order: start..end):")
    for job in end_ordered:
        print(f"  {job.end_order}: {job.start}..{job.end}")

    start_ordered = start_sort(end_ordered)
    print(f"start-order -> end-order permutation: {start_ordered.end_orders()}")

    stats = SweepStats()
    p = compute_predecessors_gpi(end_ordered, start_ordered, stats=stats)
    print(f"predecessor table p: {p}")
    print(f"sweep work: {stats.outer_iterations} outer, "
          f"{stats.inner_decrements} inner decrements (n={len(end_ordered)})")

    solution = dp_from_predecessors(end_ordered, p)
    chosen = backtrack(end_ordered, p, solution.dp)
    print(f"dp: {solution.dp}")
    print(f"max weight {solution.max_weight}, chosen end-orders {chosen}")


if __name__ == "__main__":
    main()
