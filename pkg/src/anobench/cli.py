"""Batch command-line access to pools, post-processing, metrics and search.

Exit codes: 0 success, 1 domain error (structured ``{"code", "message"}`` on
stderr), 2 usage error. Data outputs carry no timestamps, so repeated runs on
the same inputs are byte-identical.
"""

from __future__ import annotations

import csv
import functools
import json
import sys
from pathlib import Path

import click

from .errors import WorkbenchError
from .metrics import confusion, metrics_payload, pie_payload, report
from .optimize import Objective, ObjectiveTarget, SearchGrid, grid_search
from .pool import PoolQuery, describe, index_pool, select_model
from .postprocess import PostProcessConfig, postprocess
from .series import ensure_binary, load_analysis
from .version import __version__
from .windows import WindowKind, WindowSpec

_KIND_NAMES = [k.value for k in WindowKind]
_DEFAULT_THRESHOLDS = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9"


def _fail(code: str, message: str) -> None:
    click.echo(json.dumps({"code": code, "message": message}), err=True)
    sys.exit(1)


def _domain_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except WorkbenchError as exc:
            _fail(exc.code, str(exc))
        except OSError as exc:
            _fail("io_error", str(exc))

    return wrapper


def _load_binary(path: str):
    return ensure_binary(load_analysis(path))


def _print_metrics(payload: dict) -> None:
    rows = [
        ("accuracy", f"{payload['accuracy_pct']}%"),
        ("false positives", f"{payload['fp_pct']}%"),
        ("false negatives", f"{payload['fn_pct']}%"),
        ("f1", f"{payload['f1']:.4f}"),
        ("tp / tn / fp / fn", f"{payload['tp']} / {payload['tn']} / {payload['fp']} / {payload['fn']}"),
        ("runtime mean (ms)", f"{payload['runtime_mean_ms']:.4f}"),
        ("runtime p99 (ms)", f"{payload['runtime_p99_ms']:.4f}"),
        ("runtime max (ms)", f"{payload['runtime_max_ms']:.4f}"),
    ]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        click.echo(f"{name:<{width}}  {value}")


def _comma_ints(_ctx, param, value):
    if value is None:
        return None
    try:
        items = sorted({int(v) for v in value.split(",") if v.strip()})
    except ValueError:
        raise click.BadParameter(f"expected a comma-separated list of integers, got {value!r}")
    if not items:
        raise click.BadParameter(f"{param.name} must not be empty")
    return tuple(items)


def _comma_floats(_ctx, param, value):
    if value is None:
        return None
    try:
        items = sorted({float(v) for v in value.split(",") if v.strip()})
    except ValueError:
        raise click.BadParameter(f"expected a comma-separated list of numbers, got {value!r}")
    if not items:
        raise click.BadParameter(f"{param.name} must not be empty")
    return tuple(items)


def _comma_kinds(_ctx, _param, value):
    try:
        return tuple(WindowKind.parse(v.strip()) for v in value.split(",") if v.strip())
    except ValueError as exc:
        raise click.BadParameter(str(exc))


@click.group()
@click.version_option(__version__)
def main():
    """Inspect model pools, post-process analysis results, and search configs."""


@main.group()
def pool():
    """Model-pool commands."""


_QUERY_OPTIONS = [
    click.option("--window-size", type=click.IntRange(min=1), default=None,
                 help="Dataset sliding-window length to match."),
    click.option("--dimensionality", type=click.IntRange(min=1), default=None,
                 help="Sensor channel count to match."),
    click.option("--reduced-features", type=click.BOOL, default=None,
                 help="Match models trained on a limited feature selection."),
    click.option("--binary", type=click.BOOL, default=None,
                 help="Match models trained on 2-class data."),
]


def _with_query_options(fn):
    for option in reversed(_QUERY_OPTIONS):
        fn = option(fn)
    return fn


@pool.command("list")
@click.option("--pool", "pool_dir", required=True, type=click.Path(file_okay=False),
              help="Pool directory containing pool.json.")
@_domain_errors
def pool_list(pool_dir):
    """Print every manifest entry, sorted by model name."""
    entries = sorted(index_pool(pool_dir), key=lambda e: e.model_name)
    header = ("model_name", "window_size", "dimensionality", "reduced_features",
              "binary", "test_avg_f1", "accuracy", "analysis_length")
    rows = [header] + [
        (e.model_name, str(e.window_size), str(e.dimensionality), str(e.reduced_features),
         str(e.binary), f"{e.test_avg_f1:.4f}", f"{e.accuracy:.4f}", str(e.analysis_length))
        for e in entries
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for row in rows:
        click.echo("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


@pool.command("select")
@click.option("--pool", "pool_dir", required=True, type=click.Path(file_okay=False))
@_with_query_options
@_domain_errors
def pool_select(pool_dir, window_size, dimensionality, reduced_features, binary):
    """Pick the best-scoring model matching the query and print its summary."""
    entries = index_pool(pool_dir)
    query = PoolQuery(window_size=window_size, dimensionality=dimensionality,
                      reduced_features=reduced_features, binary=binary)
    summary = describe(select_model(entries, query))
    for key in ("model_name", "accuracy", "analysis_length", "test_avg_f1"):
        click.echo(f"{key:<16} {summary[key]}")


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False),
              help="Analysis-result file (.dtaz.jsonl).")
@click.option("--window", "window_kind", required=True, type=click.Choice(_KIND_NAMES),
              help="Window kind for the rolling average.")
@click.option("--size", "window_length", required=True, type=click.IntRange(min=1),
              help="Window length in samples.")
@click.option("--threshold", required=True, type=float, help="Decision threshold in [0, 1].")
@click.option("--output", "output_path", required=True, type=click.Path(dir_okay=False),
              help="Where to write the processed-series JSON.")
@_domain_errors
def process(input_path, window_kind, window_length, threshold, output_path):
    """Post-process one analysis file and write the smoothed/decided series."""
    series = _load_binary(input_path)
    config = PostProcessConfig(
        window=WindowSpec(WindowKind(window_kind), window_length), threshold=threshold
    )
    processed = postprocess(series, config)
    payload = metrics_payload(report(confusion(processed.decided, series.ground_truth),
                                     series.runtime_ms))
    document = {
        "config": {
            "window": {"kind": config.window.kind.value, "length": config.window.length},
            "threshold": config.threshold,
        },
        "metrics": payload,
        "smoothed": processed.smoothed.tolist(),
        "decided": processed.decided.tolist(),
    }
    Path(output_path).write_text(json.dumps(document), encoding="utf-8")
    _print_metrics(payload)


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True, default=False,
              help="Emit the raw-series metrics as JSON instead of a table.")
@_domain_errors
def metrics(input_path, as_json):
    """Score the raw predictions of one analysis file."""
    series = _load_binary(input_path)
    conf = confusion(series.predicted, series.ground_truth)
    payload = metrics_payload(report(conf, series.runtime_ms))
    if as_json:
        click.echo(json.dumps({"metrics": payload, "pie": pie_payload(conf)}))
    else:
        _print_metrics(payload)


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False))
@click.option("--objective", required=True,
              type=click.Choice([t.value for t in ObjectiveTarget]),
              help="Metric to optimize toward.")
@click.option("--kinds", default=",".join(_KIND_NAMES), callback=_comma_kinds,
              show_default=True, help="Comma-separated window kinds.")
@click.option("--lengths", required=True, callback=_comma_ints,
              help="Comma-separated window lengths.")
@click.option("--thresholds", default=_DEFAULT_THRESHOLDS, callback=_comma_floats,
              show_default=True, help="Comma-separated thresholds in [0, 1].")
@click.option("--accuracy-floor", type=float, default=None,
              help="Only consider configs whose accuracy reaches this floor.")
@click.option("--audit", "audit_path", type=click.Path(dir_okay=False),
              default="grid_audit.csv", show_default=True,
              help="Where to write the per-config audit CSV.")
@_domain_errors
def optimize(input_path, objective, kinds, lengths, thresholds, accuracy_floor, audit_path):
    """Exhaustively search the grid and report the best configuration."""
    series = _load_binary(input_path)
    try:
        grid = SearchGrid(kinds=kinds, lengths=lengths, thresholds=thresholds)
        target = Objective(target=ObjectiveTarget(objective), accuracy_floor=accuracy_floor)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    result = grid_search(series, grid, target)
    best = result.best_config
    with open(audit_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["kind", "length", "threshold", "accuracy", "fp_ratio",
                         "fn_ratio", "feasible", "best"])
        for point in result.audit:
            is_best = (point.kind is best.window.kind
                       and point.length == best.window.length
                       and point.threshold == best.threshold)
            writer.writerow([
                point.kind.value, point.length, repr(point.threshold),
                repr(point.accuracy), repr(point.fp_ratio), repr(point.fn_ratio),
                int(point.feasible), int(is_best),
            ])
    click.echo(f"best: kind={best.window.kind.value} length={best.window.length} "
               f"threshold={best.threshold}")
    click.echo(f"evaluated={result.evaluated} feasible={result.feasible}")
    _print_metrics(metrics_payload(result.best_metrics))
    click.echo(f"audit written to {audit_path}", err=True)


@main.command()
@click.option("--pool", "pool_dir", required=True, type=click.Path(file_okay=False),
              help="Pool directory to serve.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--max-points", default=4000, show_default=True, type=click.IntRange(min=4),
              help="Per-channel cap on plot payload points.")
@click.option("--ui", "ui_dir", type=click.Path(file_okay=False), default=None,
              help="Optional directory of static UI assets to serve at /.")
@_domain_errors
def serve(pool_dir, host, port, max_points, ui_dir):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    app = create_app(pool_dir, max_points=max_points, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
