"""Pure NumPy fallback for the compiled kernels in _ckernels.pyx.

Both backends implement bisect_right bin assignment clamped to [0, m-1];
they must return identical counts for identical inputs.
"""

from __future__ import annotations

import numpy as np


def bin_counts(values: np.ndarray, edges: np.ndarray) -> np.ndarray:
    m = len(edges) - 1
    idx = np.searchsorted(edges, values, side="right") - 1
    np.clip(idx, 0, m - 1, out=idx)
    return np.bincount(idx, minlength=m).astype(np.int64)


def sample_std(values: np.ndarray) -> float:
    n = len(values)
    if n < 2:
        raise ValueError("sample_std needs at least 2 values")
    mean = values.sum() / n
    d = values - mean
    return float(np.sqrt((d * d).sum() / (n - 1)))
