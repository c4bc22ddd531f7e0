"""Brute-force references, deliberately sharing no sorting or predecessor
code with the solvers, so a bug cannot cancel out across implementations.
"""

from __future__ import annotations

EXHAUSTIVE_LIMIT = 20


class TooLargeError(ValueError):
    pass


def exhaustive_max_weight(jobs):
    """Best weight over all pairwise-compatible subsets (empty set included).

    Enumerates all 2^n subsets via bitmask, extending each subset by its
    lowest set bit; guarded to n <= 20.
    """
    n = len(jobs)
    if n > EXHAUSTIVE_LIMIT:
        raise TooLargeError(f"exhaustive oracle limited to n <= {EXHAUSTIVE_LIMIT}")
    # ok_with[i] = bitmask of jobs compatible with job i
    ok_with = [0] * n
    for i, a in enumerate(jobs):
        m = 0
        for j, b in enumerate(jobs):
            if i != j and (a.end <= b.start or b.end <= a.start):
                m |= 1 << j
        ok_with[i] = m

    size = 1 << n
    valid = bytearray(size)
    valid[0] = 1
    weight = [0.0] * size
    best = 0
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        if valid[rest] and rest & ~ok_with[low] == 0:
            valid[mask] = 1
            w = weight[rest] + jobs[low].weight
            weight[mask] = w
            if w > best:
                best = w
    return best


def quadratic_dp_max_weight(jobs):
    """Same recurrence as the solvers, but end-sorted by insertion and with
    each predecessor found by a backward linear scan.  O(n^2) throughout."""
    ordered = []  # (start, end, weight), insertion-sorted by (end, start)
    for job in jobs:
        key = (job.end, job.start)
        k = len(ordered)
        while k > 0 and (ordered[k - 1][1], ordered[k - 1][0]) > key:
            k -= 1
        ordered.insert(k, (job.start, job.end, job.weight))

    n = len(ordered)
    dp = [0] * (n + 1)
    for i in range(1, n + 1):
        start_i = ordered[i - 1][0]
        k = i - 1
        while k > 0 and ordered[k - 1][1] > start_i:
            k -= 1
        cand = ordered[i - 1][2] + dp[k]
        dp[i] = cand if cand > dp[i - 1] else dp[i - 1]
    return dp[n]
