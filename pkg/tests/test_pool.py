import json

import pytest

from anobench.errors import (
    DanglingAnalysisPath,
    DuplicateModelName,
    MalformedRecord,
    MissingManifest,
    NoMatchingModel,
)
from anobench.pool import PoolQuery, describe, index_pool, select_model
from anobench.series import load_analysis

from helpers import build_pool, pool_entry_dict, random_series, simple_pool


class TestIndexPool:
    def test_three_entries_in_manifest_order(self, tmp_path, rng):
        pool_dir = simple_pool(tmp_path, rng)
        entries = index_pool(pool_dir)
        assert [e.model_name for e in entries] == ["model_a", "model_b", "model_c"]

    def test_analysis_paths_resolve_and_load(self, tmp_path, rng):
        pool_dir = simple_pool(tmp_path, rng)
        for entry in index_pool(pool_dir):
            series = load_analysis(entry.analysis_path)
            assert len(series) == entry.analysis_length

    def test_duplicate_model_name(self, tmp_path, rng):
        series = random_series(rng, 10)
        entries = [
            pool_entry_dict("tabl_a", "one.dtaz.jsonl", 10),
            pool_entry_dict("tabl_a", "two.dtaz.jsonl", 10),
        ]
        pool_dir = build_pool(tmp_path / "pool", entries,
                              {"tabl_a": series})
        # write the second file too so only the name collides
        from anobench.series import write_analysis
        write_analysis(series, pool_dir / "two.dtaz.jsonl")
        with pytest.raises(DuplicateModelName):
            index_pool(pool_dir)

    def test_dangling_analysis_path(self, tmp_path, rng):
        entries = [pool_entry_dict("m", "gone.dtaz.jsonl", 10)]
        pool_dir = tmp_path / "pool"
        pool_dir.mkdir()
        (pool_dir / "pool.json").write_text(json.dumps({"version": 1, "models": entries}))
        with pytest.raises(DanglingAnalysisPath):
            index_pool(pool_dir)

    def test_missing_manifest(self, tmp_path):
        (tmp_path / "empty").mkdir()
        with pytest.raises(MissingManifest):
            index_pool(tmp_path / "empty")

    def test_manifest_not_json(self, tmp_path):
        pool_dir = tmp_path / "pool"
        pool_dir.mkdir()
        (pool_dir / "pool.json").write_text("{nope")
        with pytest.raises(MalformedRecord):
            index_pool(pool_dir)

    def test_manifest_wrong_version(self, tmp_path):
        pool_dir = tmp_path / "pool"
        pool_dir.mkdir()
        (pool_dir / "pool.json").write_text(json.dumps({"version": 7, "models": []}))
        with pytest.raises(MalformedRecord):
            index_pool(pool_dir)

    def test_entry_field_validation(self, tmp_path, rng):
        bad = pool_entry_dict("m", "m.dtaz.jsonl", 10)
        bad["test_avg_f1"] = 1.5
        pool_dir = build_pool(tmp_path / "pool", [bad], {"m": random_series(rng, 10)})
        with pytest.raises(MalformedRecord):
            index_pool(pool_dir)

    def test_extra_fields_are_tolerated(self, tmp_path, rng):
        entry = pool_entry_dict("m", "m.dtaz.jsonl", 10)
        entry["training_epochs"] = 40  # additive, versioned schema
        pool_dir = build_pool(tmp_path / "pool", [entry], {"m": random_series(rng, 10)})
        assert len(index_pool(pool_dir)) == 1

    def test_reindexing_returns_fresh_snapshot(self, tmp_path, rng):
        pool_dir = simple_pool(tmp_path, rng)
        first = index_pool(pool_dir)
        second = index_pool(pool_dir)
        assert first == second
        assert first is not second


class TestSelectModel:
    def make_entries(self, tmp_path, rng, f1s, names=None):
        names = names or [f"m{i}" for i in range(len(f1s))]
        entries = [
            pool_entry_dict(name, f"{name}.dtaz.jsonl", 10, test_avg_f1=f1)
            for name, f1 in zip(names, f1s)
        ]
        series = {name: random_series(rng, 10) for name in names}
        return index_pool(build_pool(tmp_path / "pool", entries, series))

    def test_argmax_f1(self, tmp_path, rng):
        entries = self.make_entries(tmp_path, rng, [0.7, 0.9, 0.8])
        assert select_model(entries, PoolQuery()).model_name == "m1"

    def test_tie_breaks_lexicographically(self, tmp_path, rng):
        entries = self.make_entries(tmp_path, rng, [0.8, 0.8], names=["b_net", "a_net"])
        assert select_model(entries, PoolQuery()).model_name == "a_net"

    def test_no_matching_model(self, tmp_path, rng):
        entries = self.make_entries(tmp_path, rng, [0.8])
        with pytest.raises(NoMatchingModel):
            select_model(entries, PoolQuery(window_size=999))

    def test_query_fields_match_exactly(self, tmp_path, rng):
        pool_dir = simple_pool(tmp_path, rng)  # window sizes 200/400/600
        entries = index_pool(pool_dir)
        chosen = select_model(entries, PoolQuery(window_size=400))
        assert chosen.model_name == "model_b"

    def test_adding_constraints_never_enlarges_match_set(self, tmp_path, rng):
        entries = index_pool(simple_pool(tmp_path, rng, n_models=6))
        base = PoolQuery(binary=True)
        tighter = PoolQuery(binary=True, reduced_features=True)
        base_matches = {e.model_name for e in entries if base.matches(e)}
        tight_matches = {e.model_name for e in entries if tighter.matches(e)}
        assert tight_matches <= base_matches

    def test_selection_is_deterministic_and_optimal(self, tmp_path, rng):
        entries = index_pool(simple_pool(tmp_path, rng, n_models=8))
        query = PoolQuery(binary=True)
        chosen = select_model(entries, query)
        assert select_model(entries, query) == chosen
        for entry in entries:
            if query.matches(entry):
                assert chosen.test_avg_f1 >= entry.test_avg_f1

    def test_empty_pool(self):
        with pytest.raises(NoMatchingModel):
            select_model([], PoolQuery())


class TestDescribe:
    def test_projection(self, tmp_path, rng):
        entries = index_pool(simple_pool(tmp_path, rng))
        entry = entries[0]
        summary = describe(entry)
        assert summary == {
            "model_name": entry.model_name,
            "accuracy": entry.accuracy,
            "analysis_length": entry.analysis_length,
            "test_avg_f1": entry.test_avg_f1,
        }
