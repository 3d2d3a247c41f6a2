"""Workbench for post-processing per-sample anomaly-detection results.

Ingests (predicted label, ground truth, runtime) triples produced by upstream
models, smooths the prediction stream with a thresholded rolling weighted
average, scores the outcome, picks the best model from a pool, and searches
post-processing parameters toward a chosen objective. An HTTP service
(:mod:`anobench.service`) and a CLI (:mod:`anobench.cli`) expose the same
core functions.
"""

from .errors import (
    DanglingAnalysisPath,
    DuplicateModelName,
    EmptyAnomalySet,
    EmptyInput,
    EmptySeries,
    InvalidLabel,
    LengthMismatch,
    MalformedRecord,
    MissingManifest,
    NoFeasibleConfig,
    NoMatchingModel,
    NoModelSelected,
    ThresholdOutOfRange,
    ValidationFailure,
    WindowTooLong,
    WorkbenchError,
    ZeroLength,
)
from .metrics import (
    ConfusionBreakdown,
    MetricsReport,
    RuntimeStats,
    cma_accuracy,
    confusion,
    metrics_payload,
    pie_breakdown,
    pie_payload,
    report,
)
from .optimize import (
    GridPointScore,
    Objective,
    ObjectiveTarget,
    OptimizationResult,
    SearchGrid,
    grid_search,
)
from .pool import ManifestEntry, PoolQuery, describe, index_pool, select_model
from .postprocess import (
    PostProcessConfig,
    ProcessedSeries,
    apply_threshold,
    postprocess,
    rolling_weighted_mean,
)
from .series import (
    AnalysisSeries,
    binarize,
    ensure_binary,
    load_analysis,
    write_analysis,
)
from .version import __version__
from .windows import WindowKind, WindowSpec, generate_window

__all__ = [
    "AnalysisSeries",
    "ConfusionBreakdown",
    "DanglingAnalysisPath",
    "DuplicateModelName",
    "EmptyAnomalySet",
    "EmptyInput",
    "EmptySeries",
    "GridPointScore",
    "InvalidLabel",
    "LengthMismatch",
    "MalformedRecord",
    "ManifestEntry",
    "MetricsReport",
    "MissingManifest",
    "NoFeasibleConfig",
    "NoMatchingModel",
    "NoModelSelected",
    "Objective",
    "ObjectiveTarget",
    "OptimizationResult",
    "PoolQuery",
    "PostProcessConfig",
    "ProcessedSeries",
    "RuntimeStats",
    "SearchGrid",
    "ThresholdOutOfRange",
    "ValidationFailure",
    "WindowKind",
    "WindowSpec",
    "WindowTooLong",
    "WorkbenchError",
    "ZeroLength",
    "apply_threshold",
    "binarize",
    "cma_accuracy",
    "confusion",
    "describe",
    "ensure_binary",
    "generate_window",
    "grid_search",
    "index_pool",
    "load_analysis",
    "metrics_payload",
    "pie_breakdown",
    "pie_payload",
    "postprocess",
    "report",
    "rolling_weighted_mean",
    "select_model",
    "write_analysis",
    "__version__",
]
