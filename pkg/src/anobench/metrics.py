"""Confusion, accuracy, F1, cumulative accuracy and runtime statistics.

False-positive and false-negative ratios are fractions of ALL samples, not of
the negative/positive subsets, so accuracy + fp_ratio + fn_ratio = 1 for
every input. F1 of a stream with no positives anywhere (tp = fp = fn = 0) is
defined as 1.0: a perfect predictor on an all-normal stream should not score
zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyInput, InvalidLabel, LengthMismatch


@dataclass(frozen=True)
class ConfusionBreakdown:
    tp: int
    tn: int
    fp: int
    fn: int

    def __post_init__(self):
        counts = (self.tp, self.tn, self.fp, self.fn)
        if any(not isinstance(c, int) or isinstance(c, bool) or c < 0 for c in counts):
            raise ValueError("confusion counts must be non-negative integers")
        if sum(counts) < 1:
            raise EmptyInput("confusion must describe at least one sample")

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn


@dataclass(frozen=True)
class RuntimeStats:
    mean_ms: float
    max_ms: float
    p99_ms: float


@dataclass(frozen=True)
class MetricsReport:
    accuracy: float
    fp_ratio: float
    fn_ratio: float
    f1: float
    confusion: ConfusionBreakdown
    runtime: RuntimeStats


def _checked_labels(decided, ground_truth) -> tuple[np.ndarray, np.ndarray]:
    d = np.asarray(decided, dtype=np.int64)
    g = np.asarray(ground_truth, dtype=np.int64)
    if d.size != g.size:
        raise LengthMismatch(
            f"decided has {d.size} entries but ground_truth has {g.size}"
        )
    if d.size == 0:
        raise EmptyInput("cannot score an empty label sequence")
    for arr in (d, g):
        if arr.min() < 0 or arr.max() > 1:
            raise InvalidLabel("labels must be binary (0 or 1)")
    return d, g


def confusion(decided, ground_truth) -> ConfusionBreakdown:
    """Count (prediction, truth) agreement over aligned binary label arrays."""
    d, g = _checked_labels(decided, ground_truth)
    tp = int(np.count_nonzero((d == 1) & (g == 1)))
    tn = int(np.count_nonzero((d == 0) & (g == 0)))
    fp = int(np.count_nonzero((d == 1) & (g == 0)))
    fn = int(np.count_nonzero((d == 0) & (g == 1)))
    return ConfusionBreakdown(tp=tp, tn=tn, fp=fp, fn=fn)


def _p99_nearest_rank(values: np.ndarray) -> float:
    # value at the ceil(0.99*N)-th order statistic, 1-indexed; integer
    # arithmetic so the rank never wobbles with float rounding
    n = values.size
    rank = (99 * n + 99) // 100
    return float(np.sort(values)[rank - 1])


def runtime_stats(runtime_ms) -> RuntimeStats:
    rt = np.asarray(runtime_ms, dtype=np.float64)
    if rt.size == 0:
        raise EmptyInput("runtime_ms must contain at least one entry")
    return RuntimeStats(
        mean_ms=float(rt.mean()),
        max_ms=float(rt.max()),
        p99_ms=_p99_nearest_rank(rt),
    )


def report(conf: ConfusionBreakdown, runtime_ms) -> MetricsReport:
    """Assemble the full metrics report for one confusion breakdown."""
    n = conf.total
    f1_denom = 2 * conf.tp + conf.fp + conf.fn
    f1 = 1.0 if f1_denom == 0 else 2.0 * conf.tp / f1_denom
    return MetricsReport(
        accuracy=(conf.tp + conf.tn) / n,
        fp_ratio=conf.fp / n,
        fn_ratio=conf.fn / n,
        f1=f1,
        confusion=conf,
        runtime=runtime_stats(runtime_ms),
    )


def cma_accuracy(decided, ground_truth) -> np.ndarray:
    """Cumulative moving average of the per-sample correctness indicator."""
    d, g = _checked_labels(decided, ground_truth)
    correct = (d == g).astype(np.int64)
    return np.cumsum(correct) / np.arange(1, d.size + 1)


def pie_breakdown(conf: ConfusionBreakdown) -> dict:
    """Nested percentage rings: correct/incorrect, split into TP/TN and FP/FN.

    Values are full-precision percentages; each ring sums to 100 and the
    outer pairs sum to their inner parents.
    """
    n = conf.total
    pct = lambda c: 100.0 * c / n
    return {
        "inner": {
            "correct": pct(conf.tp + conf.tn),
            "incorrect": pct(conf.fp + conf.fn),
        },
        "outer": {
            "tp": pct(conf.tp),
            "tn": pct(conf.tn),
            "fp": pct(conf.fp),
            "fn": pct(conf.fn),
        },
    }


def _tenths_largest_remainder(counts: list[int], total: int) -> list[int]:
    # apportion 1000 tenths of a percent across the counts; largest
    # fractional remainder wins the leftovers, ties resolved by list order
    exact = [1000 * c / total for c in counts]
    floors = [int(e) for e in exact]
    leftover = 1000 - sum(floors)
    order = sorted(range(len(counts)), key=lambda i: exact[i] - floors[i], reverse=True)
    for i in order[:leftover]:
        floors[i] += 1
    return floors


def pie_payload(conf: ConfusionBreakdown) -> dict:
    """Pie rings rounded to 0.1 for display, each ring summing to exactly 100.0."""
    tenths = _tenths_largest_remainder([conf.tp, conf.tn, conf.fp, conf.fn], conf.total)
    tp_t, tn_t, fp_t, fn_t = tenths
    return {
        "inner": {
            "correct": (tp_t + tn_t) / 10.0,
            "incorrect": (fp_t + fn_t) / 10.0,
        },
        "outer": {
            "tp": tp_t / 10.0,
            "tn": tn_t / 10.0,
            "fp": fp_t / 10.0,
            "fn": fn_t / 10.0,
        },
    }


def metrics_payload(rep: MetricsReport) -> dict:
    """Flat JSON form of a report; percentage fields rounded to 0.1 here only."""
    return {
        "accuracy_pct": round(100.0 * rep.accuracy, 1),
        "fp_pct": round(100.0 * rep.fp_ratio, 1),
        "fn_pct": round(100.0 * rep.fn_ratio, 1),
        "f1": rep.f1,
        "tp": rep.confusion.tp,
        "tn": rep.confusion.tn,
        "fp": rep.confusion.fp,
        "fn": rep.confusion.fn,
        "runtime_mean_ms": rep.runtime.mean_ms,
        "runtime_max_ms": rep.runtime.max_ms,
        "runtime_p99_ms": rep.runtime.p99_ms,
    }
