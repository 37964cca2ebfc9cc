"""Reference binners: binary search and linear scan.

These serve two purposes: they are the correctness oracles the
accelerated binner is checked against, and they are the opponents the
benchmarks time.  Contract is identical to :func:`fastbin.core.bin_value`:
the result is ``|{ i : b_i <= x }|``, i.e. 0 below range and m1 + 1 at or
above the top boundary.
"""

import numpy as np

from fastbin import _backend
from fastbin.core import BinSet, _as_query_array
from fastbin.errors import NonFiniteInput

__all__ = [
    "binary_search_bin",
    "linear_search_bin",
    "binary_search_slice",
    "linear_search_slice",
]


def binary_search_bin(bins: BinSet, x) -> int:
    """Bin index of ``x`` by binary search over the full boundary array."""
    x = float(x)
    if not np.isfinite(x):
        raise NonFiniteInput()
    bounds = bins.boundaries
    lo, hi = 0, len(bounds)
    while lo < hi:
        mid = (lo + hi) >> 1
        if bounds[mid] <= x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def linear_search_bin(bins: BinSet, x) -> int:
    """Bin index of ``x`` by scanning the boundaries left to right."""
    x = float(x)
    if not np.isfinite(x):
        raise NonFiniteInput()
    i = 0
    for b in bins.boundaries:
        if b <= x:
            i += 1
        else:
            break
    return i


def binary_search_slice(bins: BinSet, xs, backend: str = "auto") -> np.ndarray:
    """Element-wise binary-search binning (batch engine for benchmarks)."""
    arr = _as_query_array(xs)
    out = np.empty(len(arr), dtype=np.int64)
    _backend.get(backend).binary_bin(bins.boundaries, arr, out)
    return out


def linear_search_slice(bins: BinSet, xs, backend: str = "auto") -> np.ndarray:
    """Element-wise linear-scan binning (batch engine for benchmarks)."""
    arr = _as_query_array(xs)
    out = np.empty(len(arr), dtype=np.int64)
    _backend.get(backend).linear_bin(bins.boundaries, arr, out)
    return out
