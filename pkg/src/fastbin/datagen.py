"""Seeded random boundaries and query datasets for tests and benchmarks.

All generation goes through numpy's PCG64 generator, so a fixed seed
reproduces bit-identical data.  Clipped distributions use rejection
sampling rather than clamping, which would pile mass onto the range
edges and distort how often each dispatch case fires.
"""

from dataclasses import dataclass

import numpy as np

from fastbin.core import BinSet, validate_bins
from fastbin.errors import RangeTooNarrow

__all__ = [
    "PRNG_NAME",
    "BOUNDARY_STYLES",
    "VALUE_DISTRIBUTIONS",
    "DataSpec",
    "gen_boundaries",
    "gen_values",
    "derive_seed",
]

PRNG_NAME = "PCG64"

BOUNDARY_STYLES = ("uniform-spacing-jitter", "sorted-uniform-draws", "clustered")
VALUE_DISTRIBUTIONS = ("uniform", "gaussian-clipped", "exponential-clipped", "bimodal-mixture")

_MAX_TRIES = 100


@dataclass(frozen=True)
class DataSpec:
    """Recipe for a query dataset: distribution, size, range, seed."""

    distribution: str
    count: int
    range: tuple
    seed: int

    def __post_init__(self):
        if self.distribution not in VALUE_DISTRIBUTIONS:
            raise ValueError(
                f"unknown distribution {self.distribution!r}; expected one of {VALUE_DISTRIBUTIONS}"
            )
        if self.count < 0:
            raise ValueError("count must be >= 0")
        low, high = self.range
        if not low < high:
            raise ValueError("range must satisfy low < high")


def derive_seed(seed: int, *tags: int) -> int:
    """Deterministic child seed for independent substreams."""
    return int(np.random.SeedSequence(entropy=(seed, *tags)).generate_state(1)[0])


def gen_boundaries(m1: int, style: str, range_: tuple, seed: int) -> BinSet:
    """Random strictly increasing boundaries: endpoints pinned to the
    range, m1 - 1 interior points drawn per ``style``."""
    if style not in BOUNDARY_STYLES:
        raise ValueError(f"unknown style {style!r}; expected one of {BOUNDARY_STYLES}")
    if m1 < 1:
        raise ValueError("m1 must be >= 1")
    low, high = float(range_[0]), float(range_[1])
    if not low < high:
        raise RangeTooNarrow(f"range [{low}, {high}] is empty")
    rng = np.random.default_rng(seed)
    for _ in range(_MAX_TRIES):
        interior = _draw_interior(rng, m1 - 1, low, high, style)
        arr = np.concatenate(([low], np.sort(interior), [high]))
        if (arr[1:] > arr[:-1]).all():
            return validate_bins(arr)
    raise RangeTooNarrow(
        f"could not fit {m1 + 1} distinct boundaries in [{low}, {high}] after {_MAX_TRIES} tries"
    )


def _draw_interior(rng, count, low, high, style):
    if count == 0:
        return np.empty(0)
    if style == "sorted-uniform-draws":
        return rng.uniform(low, high, count)
    if style == "uniform-spacing-jitter":
        step = (high - low) / (count + 1)
        base = low + step * np.arange(1, count + 1)
        return base + rng.uniform(-0.49, 0.49, count) * step
    # clustered: a few narrow bumps placed inside the range
    n_clusters = min(4, max(1, count // 8))
    centers = rng.uniform(low, high, n_clusters)
    sigma = (high - low) / (10.0 * n_clusters)
    draws = centers[rng.integers(0, n_clusters, count)] + sigma * rng.standard_normal(count)
    return _reject_outside(rng, draws, low, high, lambda k: _redraw_clustered(rng, k, centers, sigma))


def _redraw_clustered(rng, count, centers, sigma):
    idx = rng.integers(0, len(centers), count)
    return centers[idx] + sigma * rng.standard_normal(count)


def _reject_outside(rng, draws, low, high, redraw):
    bad = (draws <= low) | (draws >= high)
    while bad.any():
        draws[bad] = redraw(int(bad.sum()))
        bad = (draws <= low) | (draws >= high)
    return draws


def gen_values(spec: DataSpec) -> np.ndarray:
    """Query values in [low, high), deterministic per seed."""
    low, high = float(spec.range[0]), float(spec.range[1])
    rng = np.random.default_rng(spec.seed)
    n = spec.count
    span = high - low
    if spec.distribution == "uniform":
        draws = rng.uniform(low, high, n)
        return _resample_halfopen(rng, draws, low, high, lambda k: rng.uniform(low, high, k))
    if spec.distribution == "gaussian-clipped":
        mu, sd = low + 0.5 * span, span / 6.0
        return _resample_halfopen(rng, mu + sd * rng.standard_normal(n), low, high,
                                  lambda k: mu + sd * rng.standard_normal(k))
    if spec.distribution == "exponential-clipped":
        scale = span / 4.0
        return _resample_halfopen(rng, low + rng.exponential(scale, n), low, high,
                                  lambda k: low + rng.exponential(scale, k))
    # bimodal-mixture: two bumps at the quarter points
    mus = np.array([low + 0.25 * span, low + 0.75 * span])
    sd = span / 12.0

    def draw(k):
        return mus[rng.integers(0, 2, k)] + sd * rng.standard_normal(k)

    return _resample_halfopen(rng, draw(n), low, high, draw)


def _resample_halfopen(rng, draws, low, high, redraw):
    bad = (draws < low) | (draws >= high)
    while bad.any():
        draws[bad] = redraw(int(bad.sum()))
        bad = (draws < low) | (draws >= high)
    return draws
