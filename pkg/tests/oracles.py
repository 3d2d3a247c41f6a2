"""Independent reference implementations the fast paths are checked against.

Nothing here may call the code under test for its core arithmetic: the
rolling-mean oracles do their own summation, and the exhaustive search oracle
re-evaluates every grid point through the public one-config pipeline and
re-implements the ranking rules with explicit comparisons.
"""

from __future__ import annotations

import numpy as np

from anobench.metrics import confusion, report
from anobench.postprocess import PostProcessConfig, postprocess
from anobench.windows import WindowSpec, generate_window


def rolling_mean_direct(predicted, window: WindowSpec) -> np.ndarray:
    """Trailing weighted mean by pure-Python per-sample summation."""
    weights = [float(w) for w in generate_window(window)]
    x = [float(v) for v in predicted]
    w_len = len(weights)
    mass = sum(weights)
    out = []
    for t in range(len(x)):
        if t < w_len - 1 or mass == 0.0:
            out.append(x[t])
        else:
            acc = 0.0
            for k in range(w_len):
                acc += weights[k] * x[t - w_len + 1 + k]
            out.append(acc / mass)
    return np.array(out, dtype=np.float64)


def rolling_mean_shift_add(predicted, window: WindowSpec) -> np.ndarray:
    """Trailing weighted mean by direct summation of k-shifted slices.

    O(N*W) work like the per-sample loop, but vectorized along N so the
    large randomized sweeps stay fast.
    """
    weights = generate_window(window)
    x = np.asarray(predicted, dtype=np.float64)
    w_len = weights.size
    mass = float(weights.sum())
    out = x.copy()
    if mass == 0.0:
        return out
    acc = np.zeros(x.size - w_len + 1)
    for k in range(w_len):
        acc = acc + weights[k] * x[k : k + acc.size]
    out[w_len - 1 :] = acc / mass
    return out


class _Candidate:
    __slots__ = ("kind", "length", "threshold", "rep")

    def __init__(self, kind, length, threshold, rep):
        self.kind = kind
        self.length = length
        self.threshold = threshold
        self.rep = rep


def _objective_value(target: str, rep) -> float:
    if target == "max_accuracy":
        return -rep.accuracy
    if target == "min_fp_ratio":
        return rep.fp_ratio
    if target == "min_fn_ratio":
        return rep.fn_ratio
    raise ValueError(target)


def _strictly_better(a: _Candidate, b: _Candidate, target: str) -> bool:
    av, bv = _objective_value(target, a.rep), _objective_value(target, b.rep)
    if av != bv:
        return av < bv
    if a.rep.accuracy != b.rep.accuracy:
        return a.rep.accuracy > b.rep.accuracy
    if a.length != b.length:
        return a.length < b.length
    if a.threshold != b.threshold:
        return a.threshold < b.threshold
    return a.kind.value < b.kind.value


def exhaustive_search(series, grid, objective):
    """Independent best-config scan; iterates the grid in reversed order.

    Returns (best_config, best_report, evaluated, feasible); returns None for
    best_config when the floor eliminates every point.
    """
    target = objective.target.value
    floor = objective.accuracy_floor
    best: _Candidate | None = None
    evaluated = 0
    feasible = 0
    for kind in reversed(grid.kinds):
        for length in reversed(grid.lengths):
            for threshold in reversed(grid.thresholds):
                config = PostProcessConfig(window=WindowSpec(kind, length), threshold=threshold)
                processed = postprocess(series, config)
                rep = report(confusion(processed.decided, series.ground_truth), series.runtime_ms)
                evaluated += 1
                if floor is not None and rep.accuracy < floor:
                    continue
                feasible += 1
                cand = _Candidate(kind, length, threshold, rep)
                if best is None or _strictly_better(cand, best, target):
                    best = cand
    if best is None:
        return None, None, evaluated, feasible
    best_config = PostProcessConfig(
        window=WindowSpec(best.kind, best.length), threshold=best.threshold
    )
    return best_config, best.rep, evaluated, feasible
