"""Index a pool of trained-model manifests and pick the best match.

A pool directory holds one ``pool.json`` manifest,
``{"version": 1, "models": [...]}``, whose entries point (relative to the
manifest) at the analysis-result file produced by each model. ``test_avg_f1``
is treated as an opaque score recorded at training time; it is never
recomputed here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    DanglingAnalysisPath,
    DuplicateModelName,
    MalformedRecord,
    MissingManifest,
    NoMatchingModel,
)

MANIFEST_NAME = "pool.json"
MANIFEST_VERSION = 1


@dataclass(frozen=True)
class ManifestEntry:
    model_name: str
    window_size: int
    dimensionality: int
    reduced_features: bool
    binary: bool
    test_avg_f1: float
    accuracy: float
    analysis_path: Path
    analysis_length: int


@dataclass(frozen=True)
class PoolQuery:
    """Exact-match filters; a field left None matches anything."""

    window_size: int | None = None
    dimensionality: int | None = None
    reduced_features: bool | None = None
    binary: bool | None = None

    def matches(self, entry: ManifestEntry) -> bool:
        return (
            (self.window_size is None or entry.window_size == self.window_size)
            and (self.dimensionality is None or entry.dimensionality == self.dimensionality)
            and (self.reduced_features is None or entry.reduced_features == self.reduced_features)
            and (self.binary is None or entry.binary == self.binary)
        )


def _entry_from_dict(raw: dict, base_dir: Path, position: int) -> ManifestEntry:
    def fail(msg: str) -> MalformedRecord:
        return MalformedRecord(f"manifest entry #{position}: {msg}")

    if not isinstance(raw, dict):
        raise fail("must be a JSON object")
    try:
        name = raw["model_name"]
        window_size = raw["window_size"]
        dimensionality = raw["dimensionality"]
        reduced = raw["reduced_features"]
        binary = raw["binary"]
        f1 = raw["test_avg_f1"]
        accuracy = raw["accuracy"]
        rel_path = raw["analysis_path"]
        length = raw["analysis_length"]
    except KeyError as exc:
        raise fail(f"missing field {exc}") from exc
    if not isinstance(name, str) or not name:
        raise fail("model_name must be a non-empty string")
    for field, value in (("window_size", window_size), ("dimensionality", dimensionality),
                         ("analysis_length", length)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise fail(f"{field} must be a positive integer")
    for field, value in (("reduced_features", reduced), ("binary", binary)):
        if not isinstance(value, bool):
            raise fail(f"{field} must be a boolean")
    for field, value in (("test_avg_f1", f1), ("accuracy", accuracy)):
        if not isinstance(value, (int, float)) or isinstance(value, bool) or not 0.0 <= value <= 1.0:
            raise fail(f"{field} must be a number in [0, 1]")
    if not isinstance(rel_path, str) or not rel_path:
        raise fail("analysis_path must be a non-empty string")
    return ManifestEntry(
        model_name=name,
        window_size=window_size,
        dimensionality=dimensionality,
        reduced_features=reduced,
        binary=binary,
        test_avg_f1=float(f1),
        accuracy=float(accuracy),
        analysis_path=(base_dir / rel_path).resolve(),
        analysis_length=length,
    )


def index_pool(pool_dir: str | Path) -> list[ManifestEntry]:
    """Read and validate the pool manifest; entries come back in manifest order.

    The returned list is a fresh immutable-by-convention snapshot: re-indexing
    never mutates a previously returned list.
    """
    pool_dir = Path(pool_dir)
    manifest_path = pool_dir / MANIFEST_NAME
    if not manifest_path.is_file():
        raise MissingManifest(f"no {MANIFEST_NAME} in {pool_dir}")
    try:
        doc = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"{manifest_path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("version") != MANIFEST_VERSION:
        raise MalformedRecord(f"{manifest_path}: expected manifest version {MANIFEST_VERSION}")
    models = doc.get("models")
    if not isinstance(models, list):
        raise MalformedRecord(f"{manifest_path}: 'models' must be a list")
    entries: list[ManifestEntry] = []
    seen: set[str] = set()
    for position, raw in enumerate(models):
        entry = _entry_from_dict(raw, base_dir=pool_dir, position=position)
        if entry.model_name in seen:
            raise DuplicateModelName(f"model name {entry.model_name!r} appears twice")
        seen.add(entry.model_name)
        if not entry.analysis_path.is_file():
            raise DanglingAnalysisPath(
                f"{entry.model_name}: analysis file {entry.analysis_path} does not exist"
            )
        entries.append(entry)
    return entries


def select_model(entries: list[ManifestEntry], query: PoolQuery | None = None) -> ManifestEntry:
    """Best entry matching the query: highest test_avg_f1, name breaks ties."""
    query = query or PoolQuery()
    matching = [e for e in entries if query.matches(e)]
    if not matching:
        raise NoMatchingModel(f"no model in the pool satisfies {query}")
    return min(matching, key=lambda e: (-e.test_avg_f1, e.model_name))


def describe(entry: ManifestEntry) -> dict:
    """Display summary: name, accuracy, analysis length, selection score."""
    return {
        "model_name": entry.model_name,
        "accuracy": entry.accuracy,
        "analysis_length": entry.analysis_length,
        "test_avg_f1": entry.test_avg_f1,
    }
