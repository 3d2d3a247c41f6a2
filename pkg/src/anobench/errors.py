"""Exception hierarchy shared by every module.

Each error carries a stable snake_case ``code`` that the HTTP service and the
CLI surface verbatim in ``{"code": ..., "message": ...}`` error bodies.
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for all domain errors."""

    code = "error"


class MalformedRecord(WorkbenchError):
    """A line of an analysis file (or a manifest entry) failed to parse."""

    code = "malformed_record"

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LengthMismatch(WorkbenchError):
    code = "length_mismatch"


class InvalidLabel(WorkbenchError):
    code = "invalid_label"


class EmptySeries(WorkbenchError):
    code = "empty_series"


class EmptyAnomalySet(WorkbenchError):
    code = "empty_anomaly_set"


class ZeroLength(WorkbenchError):
    code = "zero_length"


class WindowTooLong(WorkbenchError):
    code = "window_too_long"


class ThresholdOutOfRange(WorkbenchError):
    code = "threshold_out_of_range"


class EmptyInput(WorkbenchError):
    code = "empty_input"


class MissingManifest(WorkbenchError):
    code = "missing_manifest"


class DuplicateModelName(WorkbenchError):
    code = "duplicate_model_name"


class DanglingAnalysisPath(WorkbenchError):
    code = "dangling_analysis_path"


class NoMatchingModel(WorkbenchError):
    code = "no_matching_model"


class NoFeasibleConfig(WorkbenchError):
    code = "no_feasible_config"


class NoModelSelected(WorkbenchError):
    code = "no_model_selected"


class ValidationFailure(WorkbenchError):
    """A request or flag value failed to parse into a domain type."""

    code = "validation_error"
