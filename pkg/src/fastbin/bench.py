"""Benchmark harness: accelerated binning versus binary search.

Experiment 1 sweeps the bin count m (grid size equal to m) and times both
methods on fresh random data.  Experiment 2 keeps the data fixed and
sweeps the number of extra grid cells k, measuring the extra speedup a
larger grid buys.  Results are CSV rows; medians over repeated runs are
the headline numbers, with min/max kept for noise diagnosis.  Before any
timing the accelerated output is verified against the binary-search
engine; a mismatch aborts the benchmark.
"""

import statistics
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from fastbin import _backend
from fastbin.baselines import binary_search_slice, linear_search_slice
from fastbin.core import bin_slice, case_counts, precompute
from fastbin.datagen import (
    PRNG_NAME,
    VALUE_DISTRIBUTIONS,
    BOUNDARY_STYLES,
    DataSpec,
    derive_seed,
    gen_boundaries,
    gen_values,
)
from fastbin.errors import ConfigInvalid, OracleMismatch

__all__ = [
    "CSV_HEADER",
    "BenchConfig",
    "BenchRow",
    "BenchReport",
    "run_experiment_1",
    "run_experiment_2",
    "measure_case_fractions",
]

CSV_HEADER = (
    "m,k,n,distribution,method,median_ns,min_ns,max_ns,"
    "precompute_ns,speedup_vs_binary,f0,f1,f2,f_gt2"
)

_RANGE = (0.0, 1.0)


@dataclass
class BenchConfig:
    m_values: list = field(default_factory=lambda: [4, 8, 16, 32, 64, 128, 256, 512])
    k_values: list = None  # experiment 2; None sweeps 0 .. m+1 per m
    n: int = 2_000_000
    runs: int = 30
    distributions: list = field(default_factory=lambda: ["uniform"])
    seed: int = 0
    boundary_style: str = "sorted-uniform-draws"
    include_linear: bool = False
    backend: str = "auto"

    def validate(self):
        if not self.m_values:
            raise ConfigInvalid("m_values must not be empty")
        if any(m < 1 for m in self.m_values):
            raise ConfigInvalid("every m must be >= 1")
        if self.k_values is not None and any(k < 0 for k in self.k_values):
            raise ConfigInvalid("every k must be >= 0")
        if self.runs < 3:
            raise ConfigInvalid("runs must be >= 3 (median needs at least 3 samples)")
        if self.n < 10_000:
            raise ConfigInvalid("n must be >= 10000 (timing noise floor)")
        if not self.distributions:
            raise ConfigInvalid("distributions must not be empty")
        for d in self.distributions:
            if d not in VALUE_DISTRIBUTIONS:
                raise ConfigInvalid(f"unknown distribution {d!r}")
        if self.boundary_style not in BOUNDARY_STYLES:
            raise ConfigInvalid(f"unknown boundary style {self.boundary_style!r}")
        if self.backend not in _backend.BACKENDS:
            raise ConfigInvalid(f"unknown backend {self.backend!r}")


@dataclass
class BenchRow:
    m: int
    k: int
    n: int
    distribution: str
    method: str
    median_ns: int
    min_ns: int
    max_ns: int
    precompute_ns: int
    speedup_vs_binary: float
    f0: float
    f1: float
    f2: float
    f_gt2: float

    def csv_line(self):
        return (
            f"{self.m},{self.k},{self.n},{self.distribution},{self.method},"
            f"{self.median_ns},{self.min_ns},{self.max_ns},{self.precompute_ns},"
            f"{self.speedup_vs_binary:.6g},{self.f0:.6g},{self.f1:.6g},"
            f"{self.f2:.6g},{self.f_gt2:.6g}"
        )


@dataclass
class BenchReport:
    rows: list
    backend: str
    prng: str = PRNG_NAME

    def write_csv(self, stream):
        stream.write(CSV_HEADER + "\n")
        for row in self.rows:
            stream.write(row.csv_line() + "\n")

    def select(self, **criteria):
        """Rows matching all given field values, e.g. select(m=512, method="proposed")."""
        out = self.rows
        for name, want in criteria.items():
            out = [r for r in out if getattr(r, name) == want]
        return out

    def one(self, **criteria):
        rows = self.select(**criteria)
        if len(rows) != 1:
            raise KeyError(f"expected exactly one row for {criteria}, found {len(rows)}")
        return rows[0]

    def extra_speedup_vs_k0(self, m, distribution, k):
        """Experiment 2: throughput gain of grid size m+k over m+0."""
        base = self.one(m=m, distribution=distribution, k=0, method="proposed")
        at_k = self.one(m=m, distribution=distribution, k=k, method="proposed")
        return base.median_ns / at_k.median_ns


def _time_ns(fn, runs):
    fn()  # warm-up
    samples = []
    for _ in range(runs):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return int(statistics.median(samples)), min(samples), max(samples)


def _dataset(config, m, dist):
    bseed = derive_seed(config.seed, 1, m, VALUE_DISTRIBUTIONS.index(dist))
    vseed = derive_seed(config.seed, 2, m, VALUE_DISTRIBUTIONS.index(dist))
    bins = gen_boundaries(m, config.boundary_style, _RANGE, bseed)
    values = gen_values(DataSpec(dist, config.n, _RANGE, vseed))
    return bins, values


def _verify_or_abort(acc, bins, values, backend):
    got = bin_slice(acc, values, backend=backend)
    want = binary_search_slice(bins, values, backend=backend)
    if not np.array_equal(got, want):
        bad = int(np.flatnonzero(got != want)[0])
        raise OracleMismatch(
            f"accelerated binner disagrees with binary search at value index {bad}"
        )


def _fractions(acc, values, backend):
    n0, n1, n2, ngt2 = case_counts(acc, values, backend=backend)
    n = max(1, len(values))
    return n0 / n, n1 / n, n2 / n, ngt2 / n


def run_experiment_1(config: BenchConfig) -> BenchReport:
    """Speedup of the accelerated binner over binary search as m grows.

    Grid size equals m (no extra cells).  Timing covers the whole batch
    call; generation and precompute are excluded, with precompute time
    recorded in its own column.
    """
    config.validate()
    backend = config.backend
    rows = []
    for dist in config.distributions:
        for m in config.m_values:
            bins, values = _dataset(config, m, dist)
            t0 = time.perf_counter_ns()
            acc = precompute(bins, 0)
            pre_ns = time.perf_counter_ns() - t0
            _verify_or_abort(acc, bins, values, backend)
            f0, f1, f2, fgt2 = _fractions(acc, values, backend)

            t_prop = _time_ns(lambda: bin_slice(acc, values, backend=backend), config.runs)
            t_bin = _time_ns(lambda: binary_search_slice(bins, values, backend=backend), config.runs)
            common = dict(m=m, k=0, n=config.n, distribution=dist,
                          f0=f0, f1=f1, f2=f2, f_gt2=fgt2)
            rows.append(BenchRow(method="proposed", median_ns=t_prop[0], min_ns=t_prop[1],
                                 max_ns=t_prop[2], precompute_ns=pre_ns,
                                 speedup_vs_binary=t_bin[0] / t_prop[0], **common))
            rows.append(BenchRow(method="binary", median_ns=t_bin[0], min_ns=t_bin[1],
                                 max_ns=t_bin[2], precompute_ns=0,
                                 speedup_vs_binary=1.0, **common))
            if config.include_linear:
                t_lin = _time_ns(lambda: linear_search_slice(bins, values, backend=backend),
                                 config.runs)
                rows.append(BenchRow(method="linear", median_ns=t_lin[0], min_ns=t_lin[1],
                                     max_ns=t_lin[2], precompute_ns=0,
                                     speedup_vs_binary=t_bin[0] / t_lin[0], **common))
    return BenchReport(rows=rows, backend=_resolved(backend))


def run_experiment_2(config: BenchConfig) -> BenchReport:
    """Extra speedup from oversampling the grid with k extra cells.

    For each m the data is fixed; only the grid size m+k varies.  The
    k = 0 row is the baseline the extra factor is measured against.
    """
    config.validate()
    backend = config.backend
    rows = []
    for dist in config.distributions:
        for m in config.m_values:
            bins, values = _dataset(config, m, dist)
            t_bin = _time_ns(lambda: binary_search_slice(bins, values, backend=backend), config.runs)
            ks = list(config.k_values) if config.k_values is not None else list(range(0, m + 2))
            first_fracs = None
            for k in ks:
                t0 = time.perf_counter_ns()
                acc = precompute(bins, k)
                pre_ns = time.perf_counter_ns() - t0
                _verify_or_abort(acc, bins, values, backend)
                f0, f1, f2, fgt2 = _fractions(acc, values, backend)
                if first_fracs is None or k == 0:
                    first_fracs = (f0, f1, f2, fgt2)
                t_prop = _time_ns(lambda: bin_slice(acc, values, backend=backend), config.runs)
                rows.append(BenchRow(m=m, k=k, n=config.n, distribution=dist,
                                     method="proposed", median_ns=t_prop[0],
                                     min_ns=t_prop[1], max_ns=t_prop[2],
                                     precompute_ns=pre_ns,
                                     speedup_vs_binary=t_bin[0] / t_prop[0],
                                     f0=f0, f1=f1, f2=f2, f_gt2=fgt2))
            rows.append(BenchRow(m=m, k=0, n=config.n, distribution=dist,
                                 method="binary", median_ns=t_bin[0], min_ns=t_bin[1],
                                 max_ns=t_bin[2], precompute_ns=0, speedup_vs_binary=1.0,
                                 f0=first_fracs[0], f1=first_fracs[1],
                                 f2=first_fracs[2], f_gt2=first_fracs[3]))
    return BenchReport(rows=rows, backend=_resolved(backend))


def measure_case_fractions(m1, k, distribution, n, seed,
                           boundary_style="sorted-uniform-draws", backend="auto"):
    """Measured dispatch-case fractions ``(f0, f1, f2, f_gt2)`` on random data.

    These are compared loosely against the composition-model
    probabilities; random boundaries only approximate the model.
    """
    bins = gen_boundaries(m1, boundary_style, _RANGE, derive_seed(seed, 1))
    values = gen_values(DataSpec(distribution, n, _RANGE, derive_seed(seed, 2)))
    acc = precompute(bins, k)
    return _fractions(acc, values, backend)


def _resolved(backend):
    return _backend.get(backend).NAME


def log_context(stream=sys.stderr, backend="auto"):
    """One-line provenance note (kernel backend and PRNG) for reports."""
    print(f"# fastbin bench: backend={_resolved(backend)} prng={PRNG_NAME}", file=stream)
