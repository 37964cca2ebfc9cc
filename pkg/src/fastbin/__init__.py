"""fastbin: binning into non-uniform bins in constant average time.

A one-off precompute shadows the non-uniform boundaries with a uniform
grid, histograms the boundaries into the grid cells and prefix-sums the
histogram; queries then resolve with a floor division plus at most a
couple of comparisons, falling back to a binary search over a single
cell's boundaries only when that cell is crowded.  Batch queries run on
a compiled kernel when the extension built, with a pure-Python fallback
selected at import.
"""

from fastbin._backend import active_name as kernel_backend
from fastbin.core import (
    AcceleratedBinner,
    BinSet,
    UniformGrid,
    bin_slice,
    bin_value,
    build_grid,
    case_counts,
    grid_cell,
    precompute,
    validate_bins,
)
from fastbin.baselines import (
    binary_search_bin,
    binary_search_slice,
    linear_search_bin,
    linear_search_slice,
)
from fastbin.analysis import (
    OccupancyModel,
    SlotDistribution,
    count_compositions,
    count_slot_value,
    enumerate_compositions,
    mean_gt2,
    slot_probabilities,
    slot_value_census,
    theoretical_speedup,
)
from fastbin.datagen import DataSpec, gen_boundaries, gen_values
from fastbin import errors

__version__ = "0.1.0"

__all__ = [
    "AcceleratedBinner",
    "BinSet",
    "UniformGrid",
    "DataSpec",
    "OccupancyModel",
    "SlotDistribution",
    "bin_slice",
    "bin_value",
    "binary_search_bin",
    "binary_search_slice",
    "build_grid",
    "case_counts",
    "count_compositions",
    "count_slot_value",
    "enumerate_compositions",
    "errors",
    "gen_boundaries",
    "gen_values",
    "grid_cell",
    "kernel_backend",
    "linear_search_bin",
    "linear_search_slice",
    "mean_gt2",
    "precompute",
    "slot_probabilities",
    "slot_value_census",
    "theoretical_speedup",
    "validate_bins",
    "__version__",
]
