"""NumPy implementation of the zone-scan kernels (fallback backend).

Both kernels take stacks of exponent arrays for two sets, shaped
(arrays_per_set, rows, cols), and scan the shift zone tau1 in [0, z1),
tau2 in (-z2, z2).  Output column z2 - 1 + tau2 holds shift tau2.
"""

from __future__ import annotations

import numpy as np


def _overlap(a: np.ndarray, b: np.ndarray, t1: int, t2: int):
    l1, l2 = a.shape[1], a.shape[2]
    ah = a[:, : l1 - t1, :]
    bh = b[:, t1:, :]
    if t2 >= 0:
        return ah[:, :, : l2 - t2], bh[:, :, t2:]
    return ah[:, :, -t2:], bh[:, :, : l2 + t2]


def zone_corr_float(a: np.ndarray, b: np.ndarray, roots: np.ndarray, z1: int, z2: int) -> np.ndarray:
    """Summed cross-correlation values of the two stacks over the zone."""
    delta = roots.shape[0]
    out = np.zeros((z1, 2 * z2 - 1), dtype=np.complex128)
    for t1 in range(z1):
        for t2 in range(-z2 + 1, z2):
            asub, bsub = _overlap(a, b, t1, t2)
            out[t1, z2 - 1 + t2] = roots[(asub - bsub) % delta].sum()
    return out


def zone_corr_exact(a: np.ndarray, b: np.ndarray, delta: int, z1: int, z2: int) -> np.ndarray:
    """Per-shift histograms of exponent differences mod delta.

    out[t1, z2 - 1 + t2, k] counts products contributing the k-th root of
    unity, so the correlation value is the histogram dotted with the root
    table and exact zero tests can run on the integer histogram alone.
    """
    out = np.zeros((z1, 2 * z2 - 1, delta), dtype=np.int64)
    for t1 in range(z1):
        for t2 in range(-z2 + 1, z2):
            asub, bsub = _overlap(a, b, t1, t2)
            diffs = (asub - bsub) % delta
            out[t1, z2 - 1 + t2] = np.bincount(diffs.ravel(), minlength=delta)
    return out
