import random

import pytest

from wjs import Job
from wjs.oracle import TooLargeError, exhaustive_max_weight, quadratic_dp_max_weight

from conftest import WORKED_JOBS, random_instance


def test_worked_both_oracles():
    assert exhaustive_max_weight(WORKED_JOBS) == 3
    assert quadratic_dp_max_weight(WORKED_JOBS) == 3


def test_empty_and_negative():
    assert exhaustive_max_weight([]) == 0
    assert quadratic_dp_max_weight([]) == 0
    assert exhaustive_max_weight([Job(0, 1, -7.0)]) == 0
    assert quadratic_dp_max_weight([Job(0, 1, -7.0)]) == 0


def test_two_disjoint_unit_jobs():
    jobs = [Job(0, 1, 1.0), Job(2, 3, 1.0)]
    assert quadratic_dp_max_weight(jobs) == 2


def test_exhaustive_guard():
    jobs = [Job(i, i + 1, 1.0) for i in range(21)]
    with pytest.raises(TooLargeError):
        exhaustive_max_weight(jobs)
    assert quadratic_dp_max_weight(jobs) == 21


def test_oracles_agree_on_seeded_instances():
    rng = random.Random(31)
    for trial in range(1000):
        n = rng.randint(0, 12)
        jobs = random_instance(rng, n, float_times=rng.random() < 0.5,
                               time_range=(0, 15))
        a = exhaustive_max_weight(jobs)
        b = quadratic_dp_max_weight(jobs)
        assert b == pytest.approx(a, rel=1e-12, abs=1e-9)


def test_quadratic_oracle_handles_unsorted_ties():
    jobs = [Job(2, 2, 4.0), Job(0, 2, 3.0), Job(2, 5, 2.0), Job(0, 2, 1.0)]
    assert quadratic_dp_max_weight(jobs) == exhaustive_max_weight(jobs) == 9.0
