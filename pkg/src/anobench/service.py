"""HTTP/JSON service driving the interactive what-if workbench.

One model is selected at a time (single-session tool); selection swaps the
(entry, series) snapshot atomically, so in-flight requests keep the snapshot
they started with. All computation is stateless with respect to prior
configurations: identical requests return identical payloads. Error bodies
are always ``{"code": ..., "message": ...}``.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .errors import NoModelSelected, MissingManifest, ValidationFailure, WorkbenchError
from .metrics import confusion, metrics_payload, pie_payload, report
from .optimize import Objective, OptimizationResult, SearchGrid, grid_search
from .plotting import decimation_factor, plot_channels
from .pool import ManifestEntry, PoolQuery, describe, index_pool, select_model
from .postprocess import PostProcessConfig, postprocess
from .series import AnalysisSeries, ensure_binary, load_analysis
from .version import __version__
from .windows import WindowKind, WindowSpec

DEFAULT_MAX_POINTS = 4000

_STATUS_BY_CODE = {
    "no_matching_model": 404,
    "no_model_selected": 409,
    "no_feasible_config": 409,
    "validation_error": 422,
    "missing_manifest": 500,
    "malformed_record": 500,
    "dangling_analysis_path": 500,
    "duplicate_model_name": 500,
}


class PostprocessRequest(BaseModel):
    window_kind: str
    window_length: int
    threshold: float
    max_points: int | None = None


class GridPayload(BaseModel):
    kinds: list[str]
    lengths: list[int]
    thresholds: list[float]


class ObjectivePayload(BaseModel):
    target: str
    accuracy_floor: float | None = None


class OptimizeRequest(BaseModel):
    grid: GridPayload
    objective: ObjectivePayload


class _Session:
    """Atomic (entry, series) snapshot for the single active model."""

    def __init__(self):
        self._lock = threading.Lock()
        self._current: tuple[ManifestEntry, AnalysisSeries] | None = None

    def set(self, entry: ManifestEntry, series: AnalysisSeries) -> None:
        with self._lock:
            self._current = (entry, series)

    def get(self) -> tuple[ManifestEntry, AnalysisSeries]:
        with self._lock:
            current = self._current
        if current is None:
            raise NoModelSelected("select a model via GET /api/models first")
        return current


class _OptimizeTracker:
    """Progress shared between a running grid search and the status endpoint."""

    def __init__(self):
        self._lock = threading.Lock()
        self._state = "idle"
        self._evaluated = 0
        self._total = 0

    def start(self, total: int) -> None:
        with self._lock:
            self._state, self._evaluated, self._total = "running", 0, total

    def update(self, done: int, total: int) -> None:
        with self._lock:
            self._evaluated, self._total = done, total

    def finish(self, ok: bool) -> None:
        with self._lock:
            self._state = "done" if ok else "failed"

    def snapshot(self) -> dict:
        with self._lock:
            return {"state": self._state, "evaluated": self._evaluated, "total": self._total}


def _config_payload(config: PostProcessConfig) -> dict:
    return {
        "window": {"kind": config.window.kind.value, "length": config.window.length},
        "threshold": config.threshold,
    }


def _parse_config(req: PostprocessRequest) -> PostProcessConfig:
    try:
        kind = WindowKind.parse(req.window_kind)
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from exc
    return PostProcessConfig(window=WindowSpec(kind, req.window_length), threshold=req.threshold)


def _parse_grid(payload: GridPayload) -> SearchGrid:
    try:
        kinds = tuple(WindowKind.parse(k) for k in payload.kinds)
        return SearchGrid(kinds=kinds, lengths=tuple(payload.lengths), thresholds=tuple(payload.thresholds))
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from exc


def _parse_objective(payload: ObjectivePayload) -> Objective:
    try:
        return Objective(target=payload.target, accuracy_floor=payload.accuracy_floor)
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from exc


def _load_series(entry: ManifestEntry) -> AnalysisSeries:
    # multi-class analyses are collapsed to one anomaly class on load; every
    # downstream computation is binary
    return ensure_binary(load_analysis(entry.analysis_path))


def create_app(
    pool_dir: str | Path,
    max_points: int = DEFAULT_MAX_POINTS,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    """Build the service around one pool directory.

    A pool directory without a manifest yields an empty (degraded) pool
    rather than a startup failure, so the health endpoint stays reachable.
    """
    try:
        entries = index_pool(pool_dir)
    except MissingManifest:
        entries = []

    app = FastAPI(title="anobench", version=__version__)
    session = _Session()
    tracker = _OptimizeTracker()
    optimize_lock = threading.Lock()

    @app.exception_handler(WorkbenchError)
    async def _domain_error(_req: Request, exc: WorkbenchError):
        return JSONResponse(
            status_code=_STATUS_BY_CODE.get(exc.code, 400),
            content={"code": exc.code, "message": str(exc)},
        )

    @app.exception_handler(RequestValidationError)
    async def _request_error(_req: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"code": "validation_error", "message": str(exc.errors())},
        )

    @app.get("/api/health")
    def health() -> dict:
        return {
            "status": "ok" if entries else "degraded",
            "pool_size": len(entries),
            "version": __version__,
        }

    @app.get("/api/models")
    def select(
        window_size: int | None = Query(default=None, ge=1),
        dimensionality: int | None = Query(default=None, ge=1),
        reduced_features: bool | None = Query(default=None),
        binary: bool | None = Query(default=None),
    ) -> dict:
        """Pick the best-scoring model for the query and load its analysis."""
        query = PoolQuery(
            window_size=window_size,
            dimensionality=dimensionality,
            reduced_features=reduced_features,
            binary=binary,
        )
        entry = select_model(entries, query)
        series = _load_series(entry)
        session.set(entry, series)
        raw_report = report(confusion(series.predicted, series.ground_truth), series.runtime_ms)
        return {
            "model": describe(entry),
            "metrics": metrics_payload(raw_report),
            "pie": pie_payload(raw_report.confusion),
            "session": "default",
        }

    @app.post("/api/postprocess")
    def run_postprocess(req: PostprocessRequest) -> dict:
        """Recompute smoothing, decisions, metrics and plots for one config."""
        _entry, series = session.get()
        config = _parse_config(req)
        points = min(req.max_points or max_points, max_points)
        processed = postprocess(series, config)
        conf = confusion(processed.decided, series.ground_truth)
        return {
            "config": _config_payload(config),
            "warmup_len": processed.warmup_len,
            "metrics": metrics_payload(report(conf, series.runtime_ms)),
            "pie": pie_payload(conf),
            "channels": plot_channels(series, processed, points),
            "decimation_factor": decimation_factor(len(series), points),
            "session": "default",
        }

    @app.post("/api/optimize")
    def run_optimize(req: OptimizeRequest) -> dict:
        _entry, series = session.get()
        grid = _parse_grid(req.grid)
        objective = _parse_objective(req.objective)
        with optimize_lock:
            tracker.start(grid.size)
            try:
                result: OptimizationResult = grid_search(
                    series, grid, objective, progress=tracker.update
                )
            except WorkbenchError:
                tracker.finish(ok=False)
                raise
            tracker.finish(ok=True)
        return {
            "best_config": _config_payload(result.best_config),
            "best_metrics": metrics_payload(result.best_metrics),
            "pie": pie_payload(result.best_metrics.confusion),
            "evaluated": result.evaluated,
            "feasible": result.feasible,
            "session": "default",
        }

    @app.get("/api/optimize/status")
    def optimize_status() -> dict:
        return tracker.snapshot()

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
