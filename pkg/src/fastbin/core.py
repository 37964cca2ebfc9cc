"""Binning into non-uniform bins in constant average time per value.

Bins are given by strictly increasing boundaries ``b_1 .. b_{m1+1}``; the
bin index of ``x`` is the ``i`` with ``b_i <= x < b_{i+1}`` (intervals are
left-closed).  Instead of binary searching the boundaries for every query,
a one-off precompute lays a uniform grid over the same span, histograms
the interior boundaries into the grid cells, and prefix-sums the
histogram.  A query then maps onto the grid with one floor division; the
cell's boundary count ``h`` decides the rest:

* ``h == 0``  the prefix sum is already the answer
* ``h == 1``  one comparison
* ``h == 2``  at most two comparisons
* ``h > 2``   binary search over just the ``h`` boundaries in that cell

Since crowded cells are rare, the expected per-query cost is constant.

Bin indices are plain ints: 0 means ``x < b_1``, ``m1 + 1`` means
``x >= b_{m1+1}``, and ``1 .. m1`` are the in-range bins.
"""

from dataclasses import dataclass
from math import isinf

import numpy as np

from fastbin import _backend
from fastbin.errors import (
    InvalidGridSpan,
    NonFiniteBoundary,
    NonFiniteInput,
    NotStrictlyIncreasing,
    TooFewBoundaries,
)

__all__ = [
    "BinSet",
    "UniformGrid",
    "AcceleratedBinner",
    "validate_bins",
    "build_grid",
    "grid_cell",
    "precompute",
    "bin_value",
    "bin_slice",
    "case_counts",
]


def _readonly(arr):
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BinSet:
    """Validated, strictly increasing bin boundaries (length m1 + 1)."""

    boundaries: np.ndarray

    @property
    def m1(self):
        """Number of bins."""
        return len(self.boundaries) - 1

    @property
    def low(self):
        return float(self.boundaries[0])

    @property
    def high(self):
        return float(self.boundaries[-1])


@dataclass(frozen=True)
class UniformGrid:
    """Uniform grid of ``cells`` equal-width cells spanning a bin set."""

    origin: float
    delta: float
    cells: int

    def edges(self):
        """Grid edges ``origin, origin + delta, ..., origin + cells*delta``."""
        return self.origin + self.delta * np.arange(self.cells + 1)


@dataclass(frozen=True, eq=False)
class AcceleratedBinner:
    """Immutable precomputed structure: bins + grid + histogram + prefix sums.

    ``hist[q-1]`` counts the interior boundaries that fall in grid cell
    ``q``; ``cumhist[q-1]`` is the number of boundaries at or left of the
    cell's start (prefix sums seeded with 1 for the shared low edge), so
    it is the base bin index for the cell.  Safe for concurrent reads.
    """

    bins: BinSet
    grid: UniformGrid
    hist: np.ndarray
    cumhist: np.ndarray


def validate_bins(boundaries) -> BinSet:
    """Validate raw boundaries and return a :class:`BinSet`.

    Raises :class:`TooFewBoundaries`, :class:`NonFiniteBoundary`, or
    :class:`NotStrictlyIncreasing` (reporting the first offending index).
    """
    arr = np.asarray(boundaries, dtype=np.float64).copy()
    if arr.ndim != 1:
        raise TooFewBoundaries("boundaries must be a one-dimensional sequence")
    if len(arr) < 2:
        raise TooFewBoundaries(f"need at least 2 boundaries, got {len(arr)}")
    if not np.isfinite(arr).all():
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise NonFiniteBoundary(f"boundary at index {bad} is not finite")
    rising = arr[1:] > arr[:-1]
    if not rising.all():
        raise NotStrictlyIncreasing(int(np.flatnonzero(~rising)[0]) + 1)
    return BinSet(_readonly(arr))


def build_grid(bins: BinSet, extra_cells: int = 0) -> UniformGrid:
    """Uniform grid over the span of ``bins`` with ``m1 + extra_cells`` cells.

    Extra cells trade a larger histogram for a higher fraction of
    constant-time queries.
    """
    if extra_cells < 0:
        raise ValueError("extra_cells must be >= 0")
    cells = bins.m1 + extra_cells
    delta = (bins.high - bins.low) / cells
    if delta <= 0.0 or isinf(delta):
        raise InvalidGridSpan(
            f"cell width {delta!r} for span [{bins.low}, {bins.high}] over {cells} cells"
        )
    return UniformGrid(origin=bins.low, delta=delta, cells=cells)


def grid_cell(grid: UniformGrid, x) -> int:
    """1-based grid cell of ``x``, clamped into ``[1, cells]``.

    The identical mapping is used for precompute and for queries, so
    float rounding at cell edges can never split the two apart.
    """
    return int(_backend.get().grid_cell(float(x), grid.origin, grid.delta, grid.cells))


def precompute(bins, extra_cells: int = 0) -> AcceleratedBinner:
    """Build the accelerated structure for ``bins`` (one-off, O(m1 + cells)).

    ``bins`` may be a :class:`BinSet` or raw boundaries, which are
    validated first.
    """
    if not isinstance(bins, BinSet):
        bins = validate_bins(bins)
    grid = build_grid(bins, extra_cells)
    hist = np.zeros(grid.cells, dtype=np.int64)
    for b in bins.boundaries[1:-1]:
        hist[grid_cell(grid, b) - 1] += 1
    cumhist = np.empty(grid.cells + 1, dtype=np.int64)
    cumhist[0] = 1
    np.cumsum(hist, out=cumhist[1:])
    cumhist[1:] += 1
    return AcceleratedBinner(bins=bins, grid=grid, hist=_readonly(hist), cumhist=_readonly(cumhist))


def bin_value(acc: AcceleratedBinner, x) -> int:
    """Bin index of a single value (0 below range, m1 + 1 at or above top)."""
    x = float(x)
    if not np.isfinite(x):
        raise NonFiniteInput()
    bounds = acc.bins.boundaries
    m1 = acc.bins.m1
    if x < bounds[0]:
        return 0
    if x >= bounds[m1]:
        return m1 + 1
    q = grid_cell(acc.grid, x)
    h = int(acc.hist[q - 1])
    r = int(acc.cumhist[q - 1])
    if h == 0:
        return r
    if h == 1:
        return r + 1 if x >= bounds[r] else r
    if h == 2:
        if x >= bounds[r + 1]:
            return r + 2
        if x < bounds[r]:
            return r
        return r + 1
    # rank of x within the cell's contiguous boundary run b_{r+1} .. b_{r+h}
    lo, hi = r, r + h
    while lo < hi:
        mid = (lo + hi) >> 1
        if bounds[mid] <= x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _as_query_array(xs):
    arr = np.ascontiguousarray(xs, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("query values must be a one-dimensional sequence")
    finite = np.isfinite(arr)
    if not finite.all():
        raise NonFiniteInput(index=int(np.flatnonzero(~finite)[0]))
    return arr


def bin_slice(acc: AcceleratedBinner, xs, backend: str = "auto") -> np.ndarray:
    """Element-wise :func:`bin_value` over a sequence, order preserved."""
    arr = _as_query_array(xs)
    out = np.empty(len(arr), dtype=np.int64)
    kern = _backend.get(backend)
    kern.accel_bin(
        acc.bins.boundaries,
        acc.grid.origin,
        acc.grid.delta,
        acc.grid.cells,
        acc.hist,
        acc.cumhist,
        arr,
        out,
    )
    return out


def case_counts(acc: AcceleratedBinner, xs, backend: str = "auto"):
    """How many queries hit each dispatch case: ``(n0, n1, n2, n_gt2)``.

    Out-of-range queries count toward ``n0``; the four counts sum to
    ``len(xs)``.
    """
    arr = _as_query_array(xs)
    kern = _backend.get(backend)
    return kern.case_counts(
        acc.bins.low,
        acc.bins.high,
        acc.grid.origin,
        acc.grid.delta,
        acc.grid.cells,
        acc.hist,
        arr,
    )
