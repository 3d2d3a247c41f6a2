"""Thresholded rolling weighted average over a binary prediction stream.

The filter is causal: the window trails the current sample, so it can run in
real time where future samples are unavailable. The first ``length - 1``
samples (the warm-up region, where a full trailing window does not fit) pass
the raw predictions through unchanged rather than renormalizing a partial
window, which would divide by zero for taper shapes whose leading edge weight
is zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidLabel, ThresholdOutOfRange, WindowTooLong
from .series import AnalysisSeries
from .windows import WindowSpec, generate_window


@dataclass(frozen=True)
class PostProcessConfig:
    window: WindowSpec
    threshold: float

    def __post_init__(self):
        t = self.threshold
        if not isinstance(t, (int, float)) or isinstance(t, bool) or not (0.0 <= t <= 1.0):
            raise ThresholdOutOfRange(f"threshold must lie in [0, 1], got {t!r}")
        object.__setattr__(self, "threshold", float(t))


@dataclass(frozen=True)
class ProcessedSeries:
    """Smoothed signal plus the final binary decisions for one configuration."""

    smoothed: np.ndarray
    decided: np.ndarray
    config: PostProcessConfig
    warmup_len: int


def _as_binary_floats(predicted) -> np.ndarray:
    x = np.asarray(predicted, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("predicted must be a 1-D sequence")
    if x.size and not np.isin(x, (0.0, 1.0)).all():
        raise InvalidLabel("rolling average expects binary predictions; binarize first")
    return x


def rolling_weighted_mean(predicted, window: WindowSpec) -> np.ndarray:
    """Trailing weighted mean of a 0/1 prediction stream.

    For t >= length-1 the output is the window-weighted mean of the trailing
    block ending at t, normalized by the window's total weight; warm-up
    samples are the raw predictions cast to float. A window whose total
    weight is zero (length-2 triangular/hann/bohman) degenerates to
    pass-through everywhere.
    """
    x = _as_binary_floats(predicted)
    w_len = window.length
    if w_len > x.size:
        raise WindowTooLong(
            f"window length {w_len} exceeds series length {x.size}"
        )
    out = x.copy()
    weights = generate_window(window)
    mass = weights.sum()
    if mass > 0.0:
        out[w_len - 1:] = np.correlate(x, weights, mode="valid") / mass
    return np.clip(out, 0.0, 1.0)


def apply_threshold(smoothed, threshold: float) -> np.ndarray:
    """Label 1 where the smoothed value strictly exceeds the threshold."""
    if not (0.0 <= threshold <= 1.0):
        raise ThresholdOutOfRange(f"threshold must lie in [0, 1], got {threshold!r}")
    s = np.asarray(smoothed, dtype=np.float64)
    return (s > threshold).astype(np.int64)


def postprocess(series: AnalysisSeries, config: PostProcessConfig) -> ProcessedSeries:
    """Smooth the predicted labels, then threshold them into final decisions."""
    smoothed = rolling_weighted_mean(series.predicted, config.window)
    decided = apply_threshold(smoothed, config.threshold)
    smoothed.flags.writeable = False
    decided.flags.writeable = False
    return ProcessedSeries(
        smoothed=smoothed,
        decided=decided,
        config=config,
        warmup_len=config.window.length - 1,
    )
