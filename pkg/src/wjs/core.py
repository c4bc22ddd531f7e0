"""Domain model: jobs, indexed jobs, solutions, compatibility, instance validation.

Conventions used everywhere else in the package:

* ``end_order`` is 1-based: after sorting by end time, the i-th job has
  end-order i.  Predecessor tables use 0 as the "no predecessor" sentinel.
* Times within one instance are all ``int`` or all ``float``, never mixed.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from typing import NamedTuple


class Job(NamedTuple):
    start: float
    end: float
    weight: float


class IndexedJob(NamedTuple):
    """Job expanded with its 1-based position in the end-time ordering."""

    start: float
    end: float
    weight: float
    end_order: int


#: p[i-1] is the predecessor end-order of the job with end-order i (0 = none).
PredecessorTable = list


def make_time_column(values, int_times):
    """Unboxed storage for a time column where the platform allows it."""
    if int_times:
        try:
            return array("q", values)
        except OverflowError:
            return list(values)
    return array("d", values)


def make_weight_column(values):
    # floats pack losslessly into an array; integer weights keep exact
    # arbitrary-precision sums by staying boxed
    values = list(values)
    if all(isinstance(w, float) for w in values):
        return array("d", values)
    return values


class JobArray:
    """Column-oriented sequence of end-order-expanded jobs.

    Stores starts/ends/weights (and optionally explicit end-orders) as flat
    columns so the hot loops touch unboxed scalars instead of chasing tuple
    pointers; indexing still yields an :class:`IndexedJob`.  With
    ``orders=None`` the end-order of position i is i+1 (the end-ordered
    array); a start-ordered array carries its permuted orders explicitly.
    """

    __slots__ = ("starts", "ends", "weights", "orders")

    def __init__(self, starts, ends, weights, orders=None):
        self.starts = starts
        self.ends = ends
        self.weights = weights
        self.orders = orders

    def __len__(self):
        return len(self.starts)

    def __getitem__(self, i):
        n = len(self.starts)
        if i < 0:
            i += n
        if not 0 <= i < n:
            raise IndexError(i)
        order = self.orders[i] if self.orders is not None else i + 1
        return IndexedJob(self.starts[i], self.ends[i], self.weights[i], order)

    def __iter__(self):
        orders = self.orders if self.orders is not None else range(1, len(self) + 1)
        return map(IndexedJob, self.starts, self.ends, self.weights, orders)

    def end_orders(self):
        if self.orders is not None:
            return list(self.orders)
        return list(range(1, len(self) + 1))


@dataclass
class Solution:
    max_weight: float
    chosen: list  # ascending end-orders of the selected jobs
    dp: list | None = None  # dp[0..n], dp[0] == 0
    # end_order -> original input position (0-based); filled by the solvers so
    # CLI users can map the reported end-orders back to their input lines.
    input_positions: list | None = None


class MalformedJobError(ValueError):
    def __init__(self, index, reason):
        self.index = index
        self.reason = reason
        super().__init__(f"job {index}: {reason}")


class MixedNumericKindError(ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(
            f"job {index}: start/end numeric kind differs from earlier jobs"
        )


def compatible(a, b):
    """True iff the two jobs do not overlap (touching endpoints allowed)."""
    return a.end <= b.start or b.end <= a.start


def _time_kind(x):
    # bool is an int subclass but makes no sense as a time
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return int
    if isinstance(x, float):
        return float
    return None


def validate_instance(jobs):
    """Check every job and the single-numeric-kind rule; return the instance.

    Raises :class:`MalformedJobError` or :class:`MixedNumericKindError` with
    the first offending 0-based index.
    """
    kind = None
    for i, job in enumerate(jobs):
        ks, ke = _time_kind(job.start), _time_kind(job.end)
        if ks is None or ke is None:
            raise MalformedJobError(i, "start/end must be int or float")
        if ks is not ke:
            raise MixedNumericKindError(i)
        if kind is None:
            kind = ks
        elif ks is not kind:
            raise MixedNumericKindError(i)
        if not (math.isfinite(job.start) and math.isfinite(job.end)):
            raise MalformedJobError(i, "non-finite time")
        if job.start > job.end:
            raise MalformedJobError(i, f"start {job.start} > end {job.end}")
        if isinstance(job.weight, bool) or not isinstance(job.weight, (int, float)):
            raise MalformedJobError(i, "weight must be a real number")
        if not math.isfinite(job.weight):
            raise MalformedJobError(i, "non-finite weight")
    return list(jobs)


# --- job file format: CSV with a required `start,end,weight` header ---------

JOB_FILE_HEADER = "start,end,weight"


class JobFileError(ValueError):
    def __init__(self, line_no, reason):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {reason}")


def _parse_number(token):
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        return float(token)  # may raise ValueError, caller wraps it


def parse_jobs(lines):
    """Parse the job file format from an iterable of text lines."""
    it = iter(enumerate(lines, start=1))
    try:
        _, header = next(it)
    except StopIteration:
        raise JobFileError(1, "missing header") from None
    if header.strip() != JOB_FILE_HEADER:
        raise JobFileError(1, f"header must be exactly '{JOB_FILE_HEADER}'")
    jobs = []
    for line_no, line in it:
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise JobFileError(line_no, "expected 3 comma-separated fields")
        try:
            start, end, weight = (_parse_number(tok) for tok in parts)
        except ValueError:
            raise JobFileError(line_no, f"unparseable number in '{line}'") from None
        jobs.append(Job(start, end, weight))
    return jobs


def read_jobs(path):
    with open(path) as fh:
        return parse_jobs(fh)


def write_jobs(path, jobs):
    with open(path, "w") as fh:
        fh.write(JOB_FILE_HEADER + "\n")
        for job in jobs:
            fh.write(f"{job.start!r},{job.end!r},{job.weight!r}\n")


def solution_weight(end_ordered, chosen):
    """Sum of weights of the chosen end-orders over an end-ordered array."""
    return sum(end_ordered[i - 1].weight for i in chosen)
