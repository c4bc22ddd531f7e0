"""Predecessor computation: per-job binary search, the two-pointer pass over
both orderings, and the segmented multi-worker variant of that pass.

Indexing follows the 1-based end-order convention: ``p[i - 1]`` holds the
predecessor end-order of job i, with 0 meaning "no predecessor".

All entry points accept either a :class:`JobArray` (the fast path: the loops
scan its flat columns) or any sequence of (start, end, weight, end_order)
tuples.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core import JobArray


@dataclass
class SweepStats:
    """Loop-work counters for the two-pointer pass (tested bounds: each <= n)."""

    outer_iterations: int = 0
    inner_decrements: int = 0


def start_order_view(start_ordered):
    """pi[i-1] = end-order of the job with start-order i."""
    if isinstance(start_ordered, JobArray):
        return start_ordered.end_orders()
    return [job[3] for job in start_ordered]


def _end_column(end_ordered):
    if isinstance(end_ordered, JobArray):
        return end_ordered.ends
    return [job[1] for job in end_ordered]


def find_predecessor_binary(end_ordered, i):
    """Largest k < i with end_k <= start_i, or 0 if none.

    Among jobs sharing the qualifying end value the largest end-order wins,
    matching the two-pointer pass exactly.
    """
    if isinstance(end_ordered, JobArray):
        s_i = end_ordered.starts[i - 1]
        get_end = end_ordered.ends.__getitem__
    else:
        s_i = end_ordered[i - 1][0]
        get_end = lambda k: end_ordered[k][1]  # noqa: E731
    lo, hi = 1, i - 1
    result = 0
    while lo <= hi:
        mid = (lo + hi) // 2
        if get_end(mid - 1) <= s_i:
            result = mid
            lo = mid + 1
        else:
            hi = mid - 1
    return result


def compute_predecessors_gpi(
    end_ordered, start_ordered, init="binary-search", stats=None
):
    """Two-pointer backward pass computing every predecessor in O(n).

    init="binary-search" seeds the end pointer with one binary search for the
    latest-starting job; init="top" starts it at n and lets the first inner
    loop walk it down.  Both give identical tables.
    """
    n = len(end_ordered)
    p = [0] * n
    if n == 0:
        return p
    if stats is None:
        stats = SweepStats()

    if init == "binary-search":
        end_index = find_predecessor_binary(end_ordered, start_ordered[n - 1][3])
    elif init == "top":
        end_index = n
    else:
        raise ValueError(f"unknown init mode {init!r}")

    _sweep_segment(end_ordered, start_ordered, p, n, 1, end_index, stats)
    return p


def _sweep_segment(end_ordered, start_ordered, p, hi, lo, end_index, stats):
    """Walk start-orders hi..lo (descending), writing into the shared table.

    end_index must already hold the predecessor of job pi(hi) or any
    overestimate of it; the inner loop only ever moves it down.
    """
    ends = _end_column(end_ordered)
    if isinstance(start_ordered, JobArray):
        seg_starts = start_ordered.starts
        seg_orders = start_ordered.orders
        if seg_orders is None:
            seg_orders = start_ordered.end_orders()
    else:
        seg_starts = [job[0] for job in start_ordered]
        seg_orders = [job[3] for job in start_ordered]
    outer = inner = 0
    for start_index in range(hi, lo - 1, -1):
        outer += 1
        s = seg_starts[start_index - 1]
        while end_index >= 1 and ends[end_index - 1] > s:
            end_index -= 1
            inner += 1
        if end_index == 0:
            break  # remaining jobs start before anything ends; entries stay 0
        i = seg_orders[start_index - 1]
        # zero-length jobs can tie their own start with a later job's end;
        # the predecessor must still have a smaller end-order
        p[i - 1] = end_index if end_index < i else i - 1
    stats.outer_iterations += outer
    stats.inner_decrements += inner


def compute_predecessors_parallel(end_ordered, start_ordered, workers):
    """Segmented variant: contiguous start-order ranges, one worker each.

    Each worker seeds its own end pointer with a single binary search for its
    segment's latest-starting job, then runs the same backward sweep.  Output
    is identical to the sequential pass.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    n = len(end_ordered)
    p = [0] * n
    if n == 0:
        return p

    seg = n // workers
    bounds = []  # (lo, hi) start-order ranges, 1-based inclusive
    lo = 1
    for w in range(workers):
        hi = lo + seg - 1
        if w == workers - 1:
            hi = n  # remainder goes to the last worker
        if hi >= lo:
            bounds.append((lo, hi))
        lo = hi + 1

    def run(segment):
        seg_lo, seg_hi = segment
        end_index = find_predecessor_binary(end_ordered, start_ordered[seg_hi - 1][3])
        _sweep_segment(
            end_ordered, start_ordered, p, seg_hi, seg_lo, end_index, SweepStats()
        )

    if len(bounds) == 1:
        run(bounds[0])
    else:
        with ThreadPoolExecutor(max_workers=len(bounds)) as pool:
            list(pool.map(run, bounds))
    return p
