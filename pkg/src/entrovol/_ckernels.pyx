# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled histogram/statistics kernels.

Semantics are identical to entrovol._pykernels; the two backends must agree
bin-for-bin (binary search with bisect_right semantics, clamped to [0, m-1]).
"""

import numpy as np


def bin_counts(double[::1] values, double[::1] edges):
    """Count values per bin for the given edges (len(edges) == m + 1).

    Bin i is [edges[i], edges[i+1]); the last bin is closed on the right.
    Values are assumed to lie within [edges[0], edges[m]].
    """
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t m = edges.shape[0] - 1
    counts_arr = np.zeros(m, dtype=np.int64)
    cdef long long[::1] counts = counts_arr
    cdef Py_ssize_t i, lo, hi, mid
    cdef double v
    for i in range(n):
        v = values[i]
        # bisect_right(edges, v) - 1
        lo = 0
        hi = m + 1
        while lo < hi:
            mid = (lo + hi) // 2
            if v < edges[mid]:
                hi = mid
            else:
                lo = mid + 1
        lo -= 1
        if lo < 0:
            lo = 0
        elif lo > m - 1:
            lo = m - 1
        counts[lo] += 1
    return counts_arr


def sample_std(double[::1] values):
    """Two-pass sample standard deviation (N-1 denominator)."""
    cdef Py_ssize_t n = values.shape[0]
    if n < 2:
        raise ValueError("sample_std needs at least 2 values")
    cdef double mean = 0.0, acc = 0.0, d
    cdef Py_ssize_t i
    for i in range(n):
        mean += values[i]
    mean /= n
    for i in range(n):
        d = values[i] - mean
        acc += d * d
    return (acc / (n - 1)) ** 0.5
