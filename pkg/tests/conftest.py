import random

import pytest

from wjs import Job

# Intervals from the worked example, given here already labeled by end-order:
# 1:(0.5,2) 2:(3,6) 3:(5,6.5) 4:(0,9) 5:(7,9).  Input order is scrambled so
# sorting is actually exercised.
WORKED_JOBS = [
    Job(0.0, 9.0, 1.0),
    Job(7.0, 9.0, 1.0),
    Job(0.5, 2.0, 1.0),
    Job(5.0, 6.5, 1.0),
    Job(3.0, 6.0, 1.0),
]

WORKED_PI = [4, 1, 2, 3, 5]
WORKED_P = [0, 1, 1, 0, 3]
WORKED_DP = [0, 1, 2, 2, 2, 3]
WORKED_CHOSEN = [1, 2, 5]


@pytest.fixture
def worked_jobs():
    return list(WORKED_JOBS)


def random_instance(rng, n, float_times=False, time_range=(0, 100),
                    weight_range=(-10.0, 100.0), int_weights=False):
    """Seeded random instance; start <= end, mixed durations incl. zero-length."""
    lo, hi = time_range
    jobs = []
    for _ in range(n):
        if float_times:
            a, b = rng.uniform(lo, hi), rng.uniform(lo, hi)
        else:
            a, b = rng.randint(lo, hi), rng.randint(lo, hi)
        if a > b:
            a, b = b, a
        if int_weights:
            w = rng.randint(int(weight_range[0]), int(weight_range[1]))
        else:
            w = rng.uniform(*weight_range)
        jobs.append(Job(a, b, w))
    return jobs


def make_rng(seed):
    return random.Random(seed)


# one line per acceptance criterion, echoed after the pytest summary so the
# pass/fail status survives output capture
ACCEPTANCE_LINES = []


def record_acceptance(name, passed, detail=""):
    status = "PASS" if passed else "FAIL"
    suffix = f" ({detail})" if detail else ""
    ACCEPTANCE_LINES.append(f"[{status}] {name}{suffix}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
