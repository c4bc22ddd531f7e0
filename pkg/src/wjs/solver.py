"""End-to-end solvers: classical (end-sort + per-job binary search + DP) and
the two-sort pipeline with globally precomputed predecessors, plus
backtracking recovery of the chosen job set.

The pipeline keeps jobs in column form (:class:`JobArray`) so sorting,
predecessor sweeps, and the DP all scan flat scalar columns.
"""

from __future__ import annotations

from .core import JobArray, Solution, make_time_column, make_weight_column
from .predecessor import compute_predecessors_gpi, find_predecessor_binary
from .sortkeys import Comparison, gather, stable_perm


def end_sort_expand(jobs, strategy=Comparison()):
    """End-sort into a JobArray whose position i holds end-order i+1.

    Returns (end_ordered, input_positions); input_positions[i-1] is the
    original 0-based index of the job with end-order i.
    """
    n = len(jobs)
    if n == 0:
        return JobArray([], [], []), []
    starts = [j.start for j in jobs]
    ends = [j.end for j in jobs]
    weights = [j.weight for j in jobs]
    if isinstance(strategy, Comparison):
        perm = sorted(range(n), key=lambda i: (ends[i], starts[i]))
    else:
        # stable pass by the secondary key, then by the primary key, gives
        # the canonical (end, start, input position) order
        p1 = stable_perm(starts, strategy)
        p2 = stable_perm(gather(ends, p1), strategy)
        perm = list(gather(p1, p2))
    int_times = isinstance(starts[0], int)
    end_ordered = JobArray(
        make_time_column(gather(starts, perm), int_times),
        make_time_column(gather(ends, perm), int_times),
        make_weight_column(gather(weights, perm)),
    )
    return end_ordered, perm


def start_sort(end_ordered, strategy=Comparison()):
    """Start-sort an end-ordered JobArray, carrying end-orders through.

    Within equal starts, ascending end-order already encodes the (end,
    end_order) tie-break, so one stable pass by start yields the canonical
    (start, end, end_order) order.
    """
    starts = end_ordered.starts
    perm = stable_perm(starts, strategy)
    int_times = len(starts) > 0 and isinstance(starts[0], int)
    return JobArray(
        make_time_column(gather(starts, perm), int_times),
        make_time_column(gather(end_ordered.ends, perm), int_times),
        make_weight_column(gather(end_ordered.weights, perm)),
        orders=[i + 1 for i in perm],
    )


def dp_from_predecessors(end_ordered, p):
    """Fill dp[0..n] with dp[i] = max(dp[i-1], w_i + dp[p[i]]); dp[0] = 0."""
    n = len(end_ordered)
    weights = end_ordered.weights if isinstance(end_ordered, JobArray) \
        else [j[2] for j in end_ordered]
    dp = [0] * (n + 1)
    prev = 0
    for i in range(1, n + 1):
        cand = weights[i - 1] + dp[p[i - 1]]
        if cand > prev:
            dp[i] = cand
            prev = cand
        else:
            dp[i] = prev
    return Solution(max_weight=dp[n], chosen=[], dp=dp)


def backtrack(end_ordered, p, dp):
    """Recover chosen end-orders: equal dp steps exclude, otherwise include
    and jump to the predecessor.  Returned ascending."""
    chosen = []
    i = len(end_ordered)
    while i > 0:
        if dp[i] == dp[i - 1]:
            i -= 1
        else:
            chosen.append(i)
            i = p[i - 1]
    chosen.reverse()
    return chosen


def solve_classical(jobs, strategy=Comparison()):
    """End-sort once, then binary-search each job's predecessor in the DP loop."""
    end_ordered, positions = end_sort_expand(jobs, strategy)
    n = len(end_ordered)
    weights = end_ordered.weights
    dp = [0] * (n + 1)
    p = [0] * n
    prev = 0
    for i in range(1, n + 1):
        k = find_predecessor_binary(end_ordered, i)
        p[i - 1] = k
        cand = weights[i - 1] + dp[k]
        if cand > prev:
            dp[i] = cand
            prev = cand
        else:
            dp[i] = prev
    return Solution(
        max_weight=dp[n],
        chosen=backtrack(end_ordered, p, dp),
        dp=dp,
        input_positions=positions,
    )


def solve_gpi(jobs, strategy=Comparison()):
    """Sort by end, expand, sort by start, then a single two-pointer pass
    yields every predecessor before the DP runs."""
    end_ordered, positions = end_sort_expand(jobs, strategy)
    start_ordered = start_sort(end_ordered, strategy)
    p = compute_predecessors_gpi(end_ordered, start_ordered)
    solution = dp_from_predecessors(end_ordered, p)
    solution.chosen = backtrack(end_ordered, p, solution.dp)
    solution.input_positions = positions
    return solution
