"""Seeded workload generators for the four benchmark experiments.

1: uniform integer start/end times in [0, 10^6]
2: truncated-normal float starts on [0, 10^9], uniform durations [1, 10^6]
3: truncated-exponential starts (scale 10^8), Zipf(2) durations scaled by 100
4: uniform float starts in [0, 10^9], uniform durations [1, 10^6]

All weights are uniform reals in [1, 100]; the workload shape is carried
entirely by the time distributions.  Same (experiment, n, seed) always yields
the identical instance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Job

TIME_DOMAIN_INT = 10**6  # experiment 1
TIME_DOMAIN_FLOAT = 10**9  # experiments 2-4
DURATION_CAP = 10**6
ZIPF_EXPONENT = 2.0
ZIPF_SCALE = 100
WEIGHT_LO, WEIGHT_HI = 1.0, 100.0


@dataclass(frozen=True)
class GeneratorConfig:
    experiment: int
    n: int
    seed: int
    K: int = TIME_DOMAIN_FLOAT
    zipf_exponent: float = ZIPF_EXPONENT
    zipf_scale: int = ZIPF_SCALE
    duration_cap: int = DURATION_CAP

    def __post_init__(self):
        if self.experiment not in (1, 2, 3, 4):
            raise ValueError(f"experiment must be 1..4, got {self.experiment}")
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.K <= 0:
            raise ValueError("K must be > 0")


def _weights(rng, n):
    return rng.uniform(WEIGHT_LO, WEIGHT_HI, n).tolist()


def gen_experiment1(n, seed):
    """Start and end uniform integers in [0, 10^6], swapped so end >= start."""
    rng = np.random.default_rng(seed)
    times = rng.integers(0, TIME_DOMAIN_INT, size=(n, 2), endpoint=True)
    starts = np.minimum(times[:, 0], times[:, 1]).tolist()
    ends = np.maximum(times[:, 0], times[:, 1]).tolist()
    return [Job(s, e, w) for s, e, w in zip(starts, ends, _weights(rng, n))]


def _truncated(rng, n, draw, lo, hi):
    """Rejection-sample n values from draw(size) restricted to [lo, hi]."""
    out = np.empty(0)
    while out.size < n:
        batch = draw(rng, max(n - out.size, 16))
        batch = batch[(batch >= lo) & (batch <= hi)]
        out = np.concatenate([out, batch])
    return out[:n]


def gen_experiment2(n, seed):
    """Truncated-normal starts (mean K/2, std K/10), uniform durations."""
    rng = np.random.default_rng(seed)
    K = TIME_DOMAIN_FLOAT
    starts = _truncated(
        rng, n, lambda r, m: r.normal(K / 2, K / 10, m), 0.0, float(K)
    )
    durations = rng.uniform(1.0, DURATION_CAP, n)
    return _float_jobs(starts, durations, _weights(rng, n))


def gen_experiment3(n, seed):
    """Truncated-exponential starts (scale K/10), capped scaled-Zipf durations."""
    rng = np.random.default_rng(seed)
    K = TIME_DOMAIN_FLOAT
    starts = _truncated(
        rng, n, lambda r, m: r.exponential(K / 10, m), 0.0, float(K)
    )
    z = rng.zipf(ZIPF_EXPONENT, n)
    durations = np.minimum(ZIPF_SCALE * z, DURATION_CAP).astype(float)
    return _float_jobs(starts, durations, _weights(rng, n))


def gen_experiment4(n, seed):
    """Uniform float starts over the whole [0, 10^9] domain, uniform durations."""
    rng = np.random.default_rng(seed)
    starts = rng.uniform(0.0, TIME_DOMAIN_FLOAT, n)
    durations = rng.uniform(1.0, DURATION_CAP, n)
    return _float_jobs(starts, durations, _weights(rng, n))


def _float_jobs(starts, durations, weights):
    ends = (np.asarray(starts) + np.asarray(durations)).tolist()
    return [Job(s, e, w) for s, e, w in zip(starts.tolist(), ends, weights)]


_GENERATORS = {
    1: gen_experiment1,
    2: gen_experiment2,
    3: gen_experiment3,
    4: gen_experiment4,
}


def generate(experiment, n, seed):
    try:
        gen = _GENERATORS[experiment]
    except KeyError:
        raise ValueError(f"experiment must be 1..4, got {experiment}") from None
    return gen(n, seed)
