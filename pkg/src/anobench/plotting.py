"""Plot-ready channel extraction with min-max bucket decimation.

Payloads for the interactive plots are capped at ``max_points`` samples per
channel. Decimation keeps, for every bucket, the positions of the bucket's
minimum and maximum, so spikes survive: the decimated channel's extremes
always equal the true extremes. The first and last source samples are always
included.
"""

from __future__ import annotations

import numpy as np

from .metrics import cma_accuracy
from .postprocess import ProcessedSeries
from .series import AnalysisSeries


def decimate_minmax(values, max_points: int) -> tuple[np.ndarray, np.ndarray]:
    """Return (indices, values) of a min-max decimated copy of ``values``."""
    v = np.asarray(values, dtype=np.float64)
    n = v.size
    if max_points < 4:
        raise ValueError("max_points must be at least 4")
    if n <= max_points:
        return np.arange(n), v.copy()
    buckets = max(1, (max_points - 2) // 2)
    width = -(-n // buckets)  # ceil
    pad = buckets * width - n
    lo = np.pad(v, (0, pad), constant_values=np.inf).reshape(buckets, width)
    hi = np.pad(v, (0, pad), constant_values=-np.inf).reshape(buckets, width)
    offsets = np.arange(buckets) * width
    idx_min = lo.argmin(axis=1) + offsets
    idx_max = hi.argmax(axis=1) + offsets
    indices = np.unique(np.concatenate(([0, n - 1], idx_min, idx_max)))
    indices = indices[indices < n]  # wholly-padded trailing buckets point past the end
    return indices, v[indices]


def decimation_factor(n: int, max_points: int) -> int:
    """Bucket width used for a series of length ``n``; 1 means no decimation."""
    if n <= max_points:
        return 1
    buckets = max(1, (max_points - 2) // 2)
    return -(-n // buckets)


def plot_channels(series: AnalysisSeries, processed: ProcessedSeries, max_points: int) -> dict:
    """Decimated index/value pairs for every plot channel of one response."""
    channels = {
        "predicted": series.predicted,
        "ground_truth": series.ground_truth,
        "smoothed": processed.smoothed,
        "decided": processed.decided,
        "cma": cma_accuracy(processed.decided, series.ground_truth),
        "runtime": series.runtime_ms,
    }
    payload = {}
    for name, values in channels.items():
        idx, vals = decimate_minmax(values, max_points)
        payload[name] = {"i": idx.tolist(), "v": vals.tolist()}
    return payload
