"""Exhaustive search over (window kind, window length, threshold) configs.

Grid search replaces the manual knob-twiddling workflow: every grid point is
post-processed, scored, and the best feasible config for the chosen objective
is returned together with a full audit trail. The objective is cheap per
point and non-differentiable in the threshold, so exhaustive evaluation is
both affordable and exactly reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .errors import NoFeasibleConfig, WindowTooLong
from .metrics import MetricsReport, confusion, report
from .postprocess import PostProcessConfig, apply_threshold, rolling_weighted_mean
from .series import AnalysisSeries
from .windows import WindowKind, WindowSpec


class ObjectiveTarget(str, enum.Enum):
    MAX_ACCURACY = "max_accuracy"
    MIN_FP_RATIO = "min_fp_ratio"
    MIN_FN_RATIO = "min_fn_ratio"


@dataclass(frozen=True)
class Objective:
    """Search target plus an optional accuracy constraint.

    Floors above 1 are accepted but unsatisfiable: the search then raises
    NoFeasibleConfig instead of rejecting the request up front.
    """

    target: ObjectiveTarget
    accuracy_floor: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "target", ObjectiveTarget(self.target))
        if self.accuracy_floor is not None:
            object.__setattr__(self, "accuracy_floor", float(self.accuracy_floor))


@dataclass(frozen=True)
class SearchGrid:
    kinds: tuple[WindowKind, ...]
    lengths: tuple[int, ...]
    thresholds: tuple[float, ...]

    def __post_init__(self):
        kinds = tuple(sorted(set(WindowKind(k) for k in self.kinds), key=lambda k: k.value))
        if not kinds:
            raise ValueError("grid needs at least one window kind")
        lengths = tuple(int(v) for v in self.lengths)
        if not lengths:
            raise ValueError("grid needs at least one window length")
        if any(v < 1 for v in lengths):
            raise ValueError("window lengths must be positive")
        if list(lengths) != sorted(set(lengths)):
            raise ValueError("window lengths must be strictly ascending")
        thresholds = tuple(float(v) for v in self.thresholds)
        if not thresholds:
            raise ValueError("grid needs at least one threshold")
        if any(not 0.0 <= v <= 1.0 for v in thresholds):
            raise ValueError("thresholds must lie in [0, 1]")
        if list(thresholds) != sorted(set(thresholds)):
            raise ValueError("thresholds must be strictly ascending")
        object.__setattr__(self, "kinds", kinds)
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "thresholds", thresholds)

    @property
    def size(self) -> int:
        return len(self.kinds) * len(self.lengths) * len(self.thresholds)


@dataclass(frozen=True)
class GridPointScore:
    kind: WindowKind
    length: int
    threshold: float
    accuracy: float
    fp_ratio: float
    fn_ratio: float
    f1: float
    feasible: bool


@dataclass(frozen=True)
class OptimizationResult:
    best_config: PostProcessConfig
    best_metrics: MetricsReport
    evaluated: int
    feasible: int
    audit: tuple[GridPointScore, ...]


def _rank_key(objective: Objective, point: GridPointScore):
    """Total order over grid points; smaller is better.

    Primary key is the objective value; ties fall through to higher accuracy,
    smaller window, lower threshold, then kind name, so the winner is unique
    and independent of evaluation order.
    """
    if objective.target is ObjectiveTarget.MAX_ACCURACY:
        primary = -point.accuracy
    elif objective.target is ObjectiveTarget.MIN_FP_RATIO:
        primary = point.fp_ratio
    else:
        primary = point.fn_ratio
    return (primary, -point.accuracy, point.length, point.threshold, point.kind.value)


def grid_search(
    series: AnalysisSeries,
    grid: SearchGrid,
    objective: Objective,
    progress: Callable[[int, int], None] | None = None,
) -> OptimizationResult:
    """Score every grid point and return the best feasible configuration.

    A candidate is feasible when its accuracy reaches ``accuracy_floor`` (all
    candidates are feasible if no floor is set). ``progress(done, total)`` is
    invoked after each scored point.
    """
    if grid.lengths[-1] > len(series):
        raise WindowTooLong(
            f"grid window length {grid.lengths[-1]} exceeds series length {len(series)}"
        )
    total = grid.size
    floor = objective.accuracy_floor
    audit: list[GridPointScore] = []
    best: GridPointScore | None = None
    best_key = None
    done = 0
    for kind in grid.kinds:
        for length in grid.lengths:
            smoothed = rolling_weighted_mean(series.predicted, WindowSpec(kind, length))
            for threshold in grid.thresholds:
                decided = apply_threshold(smoothed, threshold)
                conf = confusion(decided, series.ground_truth)
                n = conf.total
                accuracy = (conf.tp + conf.tn) / n
                point = GridPointScore(
                    kind=kind,
                    length=length,
                    threshold=threshold,
                    accuracy=accuracy,
                    fp_ratio=conf.fp / n,
                    fn_ratio=conf.fn / n,
                    f1=1.0 if conf.tp + conf.fp + conf.fn == 0 else 2.0 * conf.tp / (2 * conf.tp + conf.fp + conf.fn),
                    feasible=floor is None or accuracy >= floor,
                )
                audit.append(point)
                if point.feasible:
                    key = _rank_key(objective, point)
                    if best_key is None or key < best_key:
                        best, best_key = point, key
                done += 1
                if progress is not None:
                    progress(done, total)
    feasible = sum(1 for p in audit if p.feasible)
    if best is None:
        raise NoFeasibleConfig(
            f"no configuration reaches accuracy floor {floor} (evaluated {total})"
        )
    best_config = PostProcessConfig(
        window=WindowSpec(best.kind, best.length), threshold=best.threshold
    )
    best_smoothed = rolling_weighted_mean(series.predicted, best_config.window)
    best_decided = apply_threshold(best_smoothed, best_config.threshold)
    best_metrics = report(confusion(best_decided, series.ground_truth), series.runtime_ms)
    return OptimizationResult(
        best_config=best_config,
        best_metrics=best_metrics,
        evaluated=total,
        feasible=feasible,
        audit=tuple(audit),
    )
