"""Per-sample analysis results: aligned (predicted, ground truth, runtime) triples.

Labels are plain non-negative integers; in binary mode 1 marks an anomaly and
0 a normal sample. Multi-class labels are accepted at ingestion only and must
be collapsed with :func:`binarize` before post-processing or scoring.

On-disk format (``.dtaz.jsonl``): one JSON object per line. The first line is
a header ``{"version": 1, "mode": "binary"|"multiclass", "length": N}``; each
following line is ``{"i": index, "pred": int, "gt": int, "rt_ms": float}``
with indices running 0..N-1 in order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import (
    EmptyAnomalySet,
    EmptySeries,
    InvalidLabel,
    LengthMismatch,
    MalformedRecord,
)

ANALYSIS_SUFFIX = ".dtaz.jsonl"
FORMAT_VERSION = 1
_MODES = ("binary", "multiclass")


@dataclass(frozen=True)
class AnalysisSeries:
    """Immutable per-sample results of running one model over a test sequence.

    All three arrays are aligned by sample index and share the same length.
    The backing numpy arrays are marked read-only, so instances are safe to
    share across threads.
    """

    predicted: np.ndarray
    ground_truth: np.ndarray
    runtime_ms: np.ndarray

    def __post_init__(self):
        pred = np.asarray(self.predicted, dtype=np.int64)
        gt = np.asarray(self.ground_truth, dtype=np.int64)
        rt = np.asarray(self.runtime_ms, dtype=np.float64)
        if pred.ndim != 1 or gt.ndim != 1 or rt.ndim != 1:
            raise ValueError("predicted, ground_truth and runtime_ms must be 1-D")
        if not (pred.size == gt.size == rt.size):
            raise LengthMismatch(
                f"series arrays disagree in length: predicted={pred.size}, "
                f"ground_truth={gt.size}, runtime_ms={rt.size}"
            )
        if pred.size == 0:
            raise EmptySeries("a series must contain at least one sample")
        if pred.min() < 0 or gt.min() < 0:
            raise InvalidLabel("labels must be non-negative integers")
        if rt.min() < 0:
            raise ValueError("runtime_ms entries must be non-negative")
        for name, arr in (("predicted", pred), ("ground_truth", gt), ("runtime_ms", rt)):
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    def __len__(self) -> int:
        return int(self.predicted.size)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def is_binary(self) -> bool:
        """True when every label (predicted and ground truth) is 0 or 1."""
        return bool(self.predicted.max() <= 1 and self.ground_truth.max() <= 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AnalysisSeries):
            return NotImplemented
        return (
            np.array_equal(self.predicted, other.predicted)
            and np.array_equal(self.ground_truth, other.ground_truth)
            and np.array_equal(self.runtime_ms, other.runtime_ms)
        )


def _parse_header(line: str) -> tuple[str, int]:
    try:
        header = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"header is not valid JSON: {exc}", line=1) from exc
    if not isinstance(header, dict):
        raise MalformedRecord("header must be a JSON object", line=1)
    if header.get("version") != FORMAT_VERSION:
        raise MalformedRecord(
            f"unsupported format version {header.get('version')!r}", line=1
        )
    mode = header.get("mode")
    if mode not in _MODES:
        raise MalformedRecord(f"unknown mode {mode!r}", line=1)
    length = header.get("length")
    if not isinstance(length, int) or isinstance(length, bool):
        raise MalformedRecord("header length must be an integer", line=1)
    if length < 1:
        raise EmptySeries("header declares an empty series")
    return mode, length


def _parse_record(line: str, lineno: int, expect_index: int, mode: str):
    try:
        rec = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"record is not valid JSON: {exc}", line=lineno) from exc
    if not isinstance(rec, dict):
        raise MalformedRecord("record must be a JSON object", line=lineno)
    try:
        idx, pred, gt, rt = rec["i"], rec["pred"], rec["gt"], rec["rt_ms"]
    except KeyError as exc:
        raise MalformedRecord(f"record is missing field {exc}", line=lineno) from exc
    for name, value in (("i", idx), ("pred", pred), ("gt", gt)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise MalformedRecord(f"field {name!r} must be an integer", line=lineno)
    if not isinstance(rt, (int, float)) or isinstance(rt, bool):
        raise MalformedRecord("field 'rt_ms' must be a number", line=lineno)
    if idx != expect_index:
        raise MalformedRecord(
            f"out-of-order index {idx} (expected {expect_index})", line=lineno
        )
    if rt < 0:
        raise MalformedRecord("field 'rt_ms' must be non-negative", line=lineno)
    for value in (pred, gt):
        if mode == "binary":
            if value not in (0, 1):
                raise InvalidLabel(
                    f"line {lineno}: label {value} outside {{0, 1}} in binary mode"
                )
        elif value < 0:
            raise InvalidLabel(f"line {lineno}: label {value} is negative")
    return pred, gt, float(rt)


def load_analysis(path: str | Path) -> AnalysisSeries:
    """Load and validate an analysis-result file.

    Raises MalformedRecord, LengthMismatch, InvalidLabel or EmptySeries on a
    file that does not conform to the format described in the module
    docstring.
    """
    path = Path(path)
    preds: list[int] = []
    gts: list[int] = []
    rts: list[float] = []
    mode = None
    declared = None
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if mode is None:
                mode, declared = _parse_header(line)
                continue
            pred, gt, rt = _parse_record(line, lineno, expect_index=len(preds), mode=mode)
            preds.append(pred)
            gts.append(gt)
            rts.append(rt)
    if mode is None:
        raise EmptySeries(f"{path} contains no header line")
    if len(preds) != declared:
        raise LengthMismatch(
            f"header declares {declared} records but file contains {len(preds)}"
        )
    return AnalysisSeries(
        predicted=np.array(preds, dtype=np.int64),
        ground_truth=np.array(gts, dtype=np.int64),
        runtime_ms=np.array(rts, dtype=np.float64),
    )


def write_analysis(series: AnalysisSeries, path: str | Path, mode: str | None = None) -> Path:
    """Write a series in the analysis-result format; inverse of load_analysis.

    ``mode`` defaults to "binary" when every label is 0/1 and "multiclass"
    otherwise.
    """
    if mode is None:
        mode = "binary" if series.is_binary else "multiclass"
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "binary" and not series.is_binary:
        raise InvalidLabel("cannot write non-binary labels under a binary header")
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        header = {"version": FORMAT_VERSION, "mode": mode, "length": len(series)}
        fh.write(json.dumps(header) + "\n")
        for i in range(len(series)):
            rec = {
                "i": i,
                "pred": int(series.predicted[i]),
                "gt": int(series.ground_truth[i]),
                "rt_ms": float(series.runtime_ms[i]),
            }
            fh.write(json.dumps(rec) + "\n")
    return path


def ensure_binary(series: AnalysisSeries) -> AnalysisSeries:
    """Collapse every anomaly class (label >= 1) into one; no-op when already binary."""
    if series.is_binary:
        return series
    observed = set(np.unique(series.predicted)) | set(np.unique(series.ground_truth))
    return binarize(series, (int(c) for c in observed if c >= 1))


def binarize(series: AnalysisSeries, anomaly_classes: Iterable[int]) -> AnalysisSeries:
    """Collapse multi-class labels to binary: anomaly_classes map to 1, rest to 0.

    Idempotent once labels are binary and ``anomaly_classes`` contains 1.
    Runtimes are carried over unchanged.
    """
    classes = sorted(set(int(c) for c in anomaly_classes))
    if not classes:
        raise EmptyAnomalySet("anomaly_classes must name at least one class")
    return AnalysisSeries(
        predicted=np.isin(series.predicted, classes).astype(np.int64),
        ground_truth=np.isin(series.ground_truth, classes).astype(np.int64),
        runtime_ms=series.runtime_ms,
    )
