"""Shared builders for synthetic series and fixture pools."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from anobench.series import AnalysisSeries, write_analysis


def random_series(rng: np.random.Generator, n: int, anomaly_rate: float = 0.3) -> AnalysisSeries:
    """Random binary series with independent predictions and truths."""
    return AnalysisSeries(
        predicted=rng.integers(0, 2, n),
        ground_truth=(rng.random(n) < anomaly_rate).astype(np.int64),
        runtime_ms=rng.uniform(0.5, 3.0, n),
    )


def noisy_block_series(
    rng: np.random.Generator,
    n: int,
    block_len: int,
    n_blocks: int,
    flip_rate: float = 0.1,
) -> AnalysisSeries:
    """Ground truth with evenly spaced anomaly blocks; predictions flip-noised."""
    gt = np.zeros(n, dtype=np.int64)
    stride = n // n_blocks
    for b in range(n_blocks):
        start = b * stride + (stride - block_len) // 2
        gt[start : start + block_len] = 1
    flips = rng.random(n) < flip_rate
    predicted = np.where(flips, 1 - gt, gt)
    return AnalysisSeries(
        predicted=predicted, ground_truth=gt, runtime_ms=rng.uniform(0.5, 3.0, n)
    )


def transitions(labels) -> int:
    """Count 0<->1 flips along a label sequence."""
    arr = np.asarray(labels)
    return int(np.count_nonzero(np.diff(arr) != 0))


def pool_entry_dict(
    name: str,
    analysis_rel: str,
    analysis_length: int,
    window_size: int = 500,
    dimensionality: int = 60,
    reduced_features: bool = False,
    binary: bool = True,
    test_avg_f1: float = 0.8,
    accuracy: float = 0.75,
) -> dict:
    return {
        "model_name": name,
        "window_size": window_size,
        "dimensionality": dimensionality,
        "reduced_features": reduced_features,
        "binary": binary,
        "test_avg_f1": test_avg_f1,
        "accuracy": accuracy,
        "analysis_path": analysis_rel,
        "analysis_length": analysis_length,
    }


def build_pool(pool_dir: Path, entries: list[dict], series_by_name: dict[str, AnalysisSeries]) -> Path:
    """Write pool.json plus one analysis file per entry; returns the dir."""
    pool_dir.mkdir(parents=True, exist_ok=True)
    for entry in entries:
        name = entry["model_name"]
        if name in series_by_name:
            write_analysis(series_by_name[name], pool_dir / entry["analysis_path"])
    manifest = {"version": 1, "models": entries}
    (pool_dir / "pool.json").write_text(json.dumps(manifest, indent=1), encoding="utf-8")
    return pool_dir


def simple_pool(tmp_path: Path, rng: np.random.Generator, n_models: int = 3, series_len: int = 120) -> Path:
    """A small ready-to-serve pool with deterministic contents."""
    entries = []
    series_by_name = {}
    for i in range(n_models):
        name = f"model_{chr(ord('a') + i)}"
        rel = f"{name}.dtaz.jsonl"
        series = random_series(rng, series_len)
        series_by_name[name] = series
        entries.append(
            pool_entry_dict(
                name,
                rel,
                analysis_length=series_len,
                window_size=200 * (i + 1),
                dimensionality=30 * (i + 1),
                reduced_features=bool(i % 2),
                binary=True,
                test_avg_f1=0.5 + 0.05 * i,
                accuracy=0.55 + 0.04 * i,
            )
        )
    return build_pool(tmp_path / "pool", entries, series_by_name)
