# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels for binning queries.

Mirrors ``fastbin._pykernels`` exactly; outputs must be bit-identical.
All functions assume finite float64 inputs (callers validate).
"""

from libc.math cimport floor

cimport numpy as cnp

NAME = "compiled"


cdef inline Py_ssize_t _cell(double x, double origin, double delta, Py_ssize_t cells) nogil:
    # floor division onto the uniform grid, clamped against edge rounding
    cdef Py_ssize_t q = <Py_ssize_t>floor((x - origin) / delta) + 1
    if q < 1:
        q = 1
    if q > cells:
        q = cells
    return q


def grid_cell(double x, double origin, double delta, Py_ssize_t cells):
    """1-based uniform-grid cell of ``x``, clamped into [1, cells]."""
    return _cell(x, origin, delta, cells)


def accel_bin(const double[::1] bounds, double origin, double delta, Py_ssize_t cells,
              const cnp.int64_t[::1] hist, const cnp.int64_t[::1] cum,
              const double[::1] xs, cnp.int64_t[::1] out):
    """Grid-accelerated binning: constant-time dispatch on the cell's
    boundary count, binary search only inside crowded cells."""
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t m1 = bounds.shape[0] - 1
    cdef double b_low = bounds[0]
    cdef double b_high = bounds[m1]
    cdef Py_ssize_t j, q, h, r, lo, hi, mid
    cdef double x
    with nogil:
        for j in range(n):
            x = xs[j]
            if x < b_low:
                out[j] = 0
                continue
            if x >= b_high:
                out[j] = m1 + 1
                continue
            q = _cell(x, origin, delta, cells)
            h = hist[q - 1]
            r = cum[q - 1]
            if h == 0:
                out[j] = r
            elif h == 1:
                out[j] = r + 1 if x >= bounds[r] else r
            elif h == 2:
                if x >= bounds[r + 1]:
                    out[j] = r + 2
                elif x < bounds[r]:
                    out[j] = r
                else:
                    out[j] = r + 1
            else:
                # rank of x within the cell's contiguous boundary run
                lo = r
                hi = r + h
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if bounds[mid] <= x:
                        lo = mid + 1
                    else:
                        hi = mid
                out[j] = lo


def binary_bin(const double[::1] bounds, const double[::1] xs, cnp.int64_t[::1] out):
    """Binary search over the full boundary array (the classic method)."""
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t nb = bounds.shape[0]
    cdef Py_ssize_t j, lo, hi, mid
    cdef double x
    with nogil:
        for j in range(n):
            x = xs[j]
            lo = 0
            hi = nb
            while lo < hi:
                mid = (lo + hi) >> 1
                if bounds[mid] <= x:
                    lo = mid + 1
                else:
                    hi = mid
            out[j] = lo


def linear_bin(const double[::1] bounds, const double[::1] xs, cnp.int64_t[::1] out):
    """Left-to-right scan over the boundary array."""
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t nb = bounds.shape[0]
    cdef Py_ssize_t j, i
    cdef double x
    with nogil:
        for j in range(n):
            x = xs[j]
            i = 0
            while i < nb and bounds[i] <= x:
                i += 1
            out[j] = i


def case_counts(double b_low, double b_high, double origin, double delta,
                Py_ssize_t cells, const cnp.int64_t[::1] hist, const double[::1] xs):
    """Counts of queries dispatched per case (h=0, 1, 2, >2).

    Out-of-range queries cost zero comparisons and count toward h=0.
    """
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t j, h
    cdef double x
    cdef cnp.int64_t n0 = 0, n1 = 0, n2 = 0, ngt2 = 0
    with nogil:
        for j in range(n):
            x = xs[j]
            if x < b_low or x >= b_high:
                n0 += 1
                continue
            h = hist[_cell(x, origin, delta, cells) - 1]
            if h == 0:
                n0 += 1
            elif h == 1:
                n1 += 1
            elif h == 2:
                n2 += 1
            else:
                ngt2 += 1
    return int(n0), int(n1), int(n2), int(ngt2)
