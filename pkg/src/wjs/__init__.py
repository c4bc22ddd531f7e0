"""Weighted job scheduling: classical DP and global predecessor indexing."""

from .core import (
    IndexedJob,
    Job,
    JobArray,
    MalformedJobError,
    MixedNumericKindError,
    Solution,
    compatible,
    validate_instance,
)
from .predecessor import (
    compute_predecessors_gpi,
    compute_predecessors_parallel,
    find_predecessor_binary,
)
from .solver import end_sort_expand, solve_classical, solve_gpi, start_sort
from .sortkeys import (
    Bucket,
    Comparison,
    Counting,
    RadixLSD,
    SortStrategy,
    SpreadsortHybrid,
    StrategyInapplicableError,
    sort_jobs,
)

__all__ = [
    "Job",
    "IndexedJob",
    "JobArray",
    "Solution",
    "compatible",
    "validate_instance",
    "MalformedJobError",
    "MixedNumericKindError",
    "find_predecessor_binary",
    "compute_predecessors_gpi",
    "compute_predecessors_parallel",
    "solve_classical",
    "solve_gpi",
    "end_sort_expand",
    "start_sort",
    "sort_jobs",
    "SortStrategy",
    "Comparison",
    "Counting",
    "RadixLSD",
    "Bucket",
    "SpreadsortHybrid",
    "StrategyInapplicableError",
]
