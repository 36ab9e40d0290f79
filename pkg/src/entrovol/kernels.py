"""Backend selection for the histogram/statistics kernels.

The compiled Cython extension is preferred when available; setting
ENTROVOL_KERNELS=python forces the NumPy fallback. Both backends produce
identical bin counts for identical inputs.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels

_FORCED = os.environ.get("ENTROVOL_KERNELS", "").lower()

if _FORCED in ("", "cython", "c"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        if _FORCED:
            raise
        _impl = _pykernels
        BACKEND = "python"
elif _FORCED == "python":
    _impl = _pykernels
    BACKEND = "python"
else:
    raise ValueError(f"unknown ENTROVOL_KERNELS value {_FORCED!r}")


def bin_counts(values: np.ndarray, edges: np.ndarray) -> np.ndarray:
    """Per-bin counts; bin i is [edges[i], edges[i+1]), last bin closed."""
    values = np.ascontiguousarray(values, dtype=np.float64)
    edges = np.ascontiguousarray(edges, dtype=np.float64)
    return np.asarray(_impl.bin_counts(values, edges))


def sample_std(values: np.ndarray) -> float:
    """Sample standard deviation with N-1 denominator."""
    values = np.ascontiguousarray(values, dtype=np.float64)
    return float(_impl.sample_std(values))
