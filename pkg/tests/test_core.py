import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wjs import (
    Job,
    MalformedJobError,
    MixedNumericKindError,
    compatible,
    validate_instance,
)
from wjs.core import JobFileError, parse_jobs, read_jobs, write_jobs

from conftest import WORKED_JOBS


def test_touching_intervals_are_compatible():
    assert compatible(Job(0, 2, 1.0), Job(2, 5, 1.0))
    assert compatible(Job(2, 5, 1.0), Job(0, 2, 1.0))


def test_overlapping_intervals_are_incompatible():
    assert not compatible(Job(0, 2, 1.0), Job(1, 3, 1.0))
    assert not compatible(Job(3, 6, 1.0), Job(5, 6.5, 1.0))


def test_zero_length_job_self_compatible():
    assert compatible(Job(3, 3, 1.0), Job(3, 3, 2.0))
    assert not compatible(Job(1, 4, 1.0), Job(1, 4, 1.0))


finite = st.floats(allow_nan=False, allow_infinity=False, width=32)


@st.composite
def jobs_st(draw):
    a = draw(finite)
    b = draw(finite)
    if a > b:
        a, b = b, a
    return Job(a, b, draw(finite))


@given(jobs_st(), jobs_st())
def test_compatible_is_symmetric(a, b):
    assert compatible(a, b) == compatible(b, a)


@given(jobs_st())
def test_self_compatibility_iff_zero_length(job):
    assert compatible(job, job) == (job.start == job.end)


def test_validate_empty_instance():
    assert validate_instance([]) == []


def test_validate_worked_instance():
    assert validate_instance(WORKED_JOBS) == WORKED_JOBS


def test_validate_rejects_reversed_interval():
    with pytest.raises(MalformedJobError) as exc:
        validate_instance([Job(5, 3, 1.0)])
    assert exc.value.index == 0


def test_validate_rejects_non_finite():
    with pytest.raises(MalformedJobError):
        validate_instance([Job(0.0, math.inf, 1.0)])
    with pytest.raises(MalformedJobError):
        validate_instance([Job(0.0, 1.0, math.nan)])


def test_validate_reports_first_offender():
    jobs = [Job(0, 1, 1.0), Job(2, 1, 1.0), Job(9, 8, 1.0)]
    with pytest.raises(MalformedJobError) as exc:
        validate_instance(jobs)
    assert exc.value.index == 1


def test_validate_rejects_mixed_numeric_kinds():
    with pytest.raises(MixedNumericKindError) as exc:
        validate_instance([Job(0, 1, 1.0), Job(0.5, 2.0, 1.0)])
    assert exc.value.index == 1
    with pytest.raises(MixedNumericKindError):
        validate_instance([Job(0, 1.0, 1.0)])


def test_job_file_round_trip(tmp_path):
    path = tmp_path / "jobs.csv"
    jobs = [Job(0.5, 2.0, 1.0), Job(3.0, 6.0, -2.5)]
    write_jobs(path, jobs)
    assert read_jobs(path) == jobs


def test_job_file_integer_kind_round_trip(tmp_path):
    path = tmp_path / "jobs.csv"
    jobs = [Job(0, 2, 7), Job(3, 6, 1.25)]
    write_jobs(path, jobs)
    back = read_jobs(path)
    assert back == jobs
    assert isinstance(back[0].start, int)


def test_parse_requires_header():
    with pytest.raises(JobFileError) as exc:
        parse_jobs(["0,1,2"])
    assert exc.value.line_no == 1


def test_parse_reports_bad_line_number():
    with pytest.raises(JobFileError) as exc:
        parse_jobs(["start,end,weight", "0,1,2", "0,oops,2"])
    assert exc.value.line_no == 3
