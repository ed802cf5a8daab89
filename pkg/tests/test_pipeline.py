"""Dataset runs end-to-end: cardinality, determinism, skips, accounting."""

import json
from pathlib import Path

import pytest

from doppelkit.config import ModelSpec, RunConfig
from doppelkit.entities import load_default_stopwords
from doppelkit.errors import EmptyRun
from doppelkit.pipeline import discover_novels, export_mentions, prepare_novel, run_dataset
from doppelkit.report import write_report
from doppelkit.synth import write_dataset

FAST_MODELS = (
    ModelSpec("count", "count", {}),
    ModelSpec("sgns", "sgns", {"dim": 20, "epochs": 2, "negatives": 3}),
)


def make_config(dataset, **kwargs):
    defaults = dict(dataset_root=str(dataset), output_dir=str(dataset) + "_out",
                    seed=11, models=FAST_MODELS, n_perm=200)
    defaults.update(kwargs)
    return RunConfig(**defaults)


@pytest.fixture(scope="module")
def two_novel_dataset(tmp_path_factory):
    root = tmp_path_factory.mktemp("ds")
    write_dataset(root, n_novels=2, n_characters=6, target_tokens=2500, seed=3,
                  with_wiki=True)
    return root


class TestRunDataset:
    def test_cardinality_two_by_two_by_two(self, two_novel_dataset):
        report = run_dataset(make_config(two_novel_dataset))
        assert len(report["novels"]) == 2
        for novel in report["novels"]:
            keys = {(r["model_id"], r["category"]) for r in novel["results"]}
            assert keys == {
                ("count", "proper_names"), ("count", "common_nouns"),
                ("sgns", "proper_names"), ("sgns", "common_nouns"),
            }
        assert report["kind"] == "run"

    def test_every_entity_accounted_per_model(self, two_novel_dataset):
        report = run_dataset(make_config(two_novel_dataset))
        for novel in report["novels"]:
            inventory_ids = {m[0] for m in novel["inventory"]["matched_nouns"]}
            inventory_ids |= set(novel["mention_counts"]["A"])
            for spec in ("count", "sgns"):
                accounted = set(novel["excluded"])
                for part_map in novel["model_exclusions"].get(spec, {}).values():
                    accounted |= set(part_map)
                for row in novel["results"]:
                    if row["model_id"] == spec:
                        accounted |= set(row["per_entity_rr"])
                errored_categories = {
                    e.get("category") for e in novel["model_errors"]
                    if e["model_id"] == spec
                }
                for eid in inventory_ids:
                    category = "proper_names" if eid.startswith("__ent_") else "common_nouns"
                    assert eid in accounted or category in errored_categories, eid

    def test_deterministic_reports(self, two_novel_dataset, tmp_path):
        config = make_config(two_novel_dataset)
        r1 = run_dataset(config)
        r2 = run_dataset(config)
        p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
        write_report(r1, p1)
        write_report(r2, p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_worker_pool_matches_serial(self, two_novel_dataset):
        serial = run_dataset(make_config(two_novel_dataset))
        pooled = run_dataset(make_config(two_novel_dataset, workers=2))
        serial["config"]["run"]["workers"] = pooled["config"]["run"]["workers"]
        assert serial == pooled

    def test_missing_characters_json_is_skip_not_abort(self, tmp_path):
        write_dataset(tmp_path, n_novels=2, n_characters=5, target_tokens=1500, seed=4)
        (tmp_path / "synth01" / "characters.json").unlink()
        report = run_dataset(make_config(tmp_path))
        assert len(report["novels"]) == 1
        assert report["skipped"][0]["novel_id"] == "synth01"
        assert "characters.json" in report["skipped"][0]["reason"]

    def test_sparse_characters_skip_with_too_few_entities(self, tmp_path):
        novel_dir = tmp_path / "tiny"
        novel_dir.mkdir()
        (novel_dir / "novel.txt").write_text(
            "Ada saw the lamp. Bo read a letter. The lamp burned. The letter waited. "
            "Someone walked the garden. The garden slept. A lamp is a lamp. More letters came.",
            encoding="utf-8",
        )
        (novel_dir / "characters.json").write_text(json.dumps({
            "characters": [
                {"id": "ada", "name": "Ada", "aliases": ["Ada"]},
                {"id": "bo", "name": "Bo", "aliases": ["Bo"]},
            ]
        }), encoding="utf-8")
        report_config = make_config(tmp_path, min_mentions=2)
        with pytest.raises(EmptyRun):
            run_dataset(report_config)

    def test_empty_dataset_raises_empty_run(self, tmp_path):
        (tmp_path / "not_a_novel").mkdir()
        with pytest.raises(EmptyRun):
            run_dataset(make_config(tmp_path))

    def test_additive_leave_one_out_background(self, two_novel_dataset):
        models = FAST_MODELS + (
            ModelSpec("additive", "additive",
                      {"background_dim": 16, "background_epochs": 1}),
        )
        report = run_dataset(make_config(two_novel_dataset, models=models))
        for novel in report["novels"]:
            additive_rows = [r for r in novel["results"] if r["model_id"] == "additive"]
            assert additive_rows, novel["model_errors"]

    def test_covariates_recorded(self, two_novel_dataset):
        report = run_dataset(make_config(two_novel_dataset))
        for novel in report["novels"]:
            cov = novel["covariates"]
            assert cov["length_tokens"] > 1000
            assert cov["n_characters"] >= 2
            assert cov["mention_sd"] >= 0

    def test_pos_profile_present_for_tagged_dataset(self, two_novel_dataset):
        report = run_dataset(make_config(two_novel_dataset))
        profile = report["pos_profile"]
        assert profile["note"] == ""
        assert profile["columns"] == ["ADJ", "ADV", "DET", "NOUN", "PRON", "VERB"]
        total = sum(sum(row) for row in profile["counts"])
        assert total > 0

    def test_manifest_hashes_inputs(self, two_novel_dataset):
        report = run_dataset(make_config(two_novel_dataset))
        assert any(key.endswith("novel.conllu") for key in report["manifest"])
        for digest in report["manifest"].values():
            assert digest.startswith("sha256:")


class TestQualityRun:
    def test_wiki_copy_of_novel_scores_perfect_for_count(self, tmp_path):
        write_dataset(tmp_path, n_novels=1, n_characters=6, target_tokens=2500, seed=8)
        novel_dir = tmp_path / "synth00"
        text = (novel_dir / "novel.txt").read_text(encoding="utf-8")
        (novel_dir / "wiki.txt").write_text(text, encoding="utf-8")
        config = make_config(tmp_path, models=(ModelSpec("count", "count", {}),))
        report = run_dataset(config, quality=True)
        rows = report["novels"][0]["results"]
        assert rows
        for row in rows:
            assert row["mrr"] == 1.0
            assert row["accuracy_at_1"] == 1.0

    def test_novel_without_wiki_is_listed_not_fatal(self, tmp_path):
        write_dataset(tmp_path, n_novels=3, n_characters=5, target_tokens=2000, seed=9,
                      with_wiki=True)
        (tmp_path / "synth02" / "wiki.txt").unlink()
        config = make_config(tmp_path, min_mentions=1,
                             models=(ModelSpec("count", "count", {}),))
        report = run_dataset(config, quality=True)
        assert len(report["novels"]) == 2
        assert {s["novel_id"] for s in report["skipped"]} == {"synth02"}

    def test_no_wiki_at_all_is_empty_run(self, tmp_path):
        write_dataset(tmp_path, n_novels=2, n_characters=5, target_tokens=2000, seed=10)
        with pytest.raises(EmptyRun):
            run_dataset(make_config(tmp_path), quality=True)

    def test_partial_wiki_mentions_shrink_candidates(self, tmp_path):
        write_dataset(tmp_path, n_novels=1, n_characters=6, target_tokens=3000, seed=12)
        novel_dir = tmp_path / "synth00"
        chars = json.loads((novel_dir / "characters.json").read_text())["characters"]
        half = chars[: len(chars) // 2]
        nouns = ["lamp", "boat", "anvil", "kettle", "ladder", "quarry"]
        verbs = ["carried", "mended", "painted", "guarded", "hauled", "locked"]
        lines = []
        for i, c in enumerate(half):
            lines.append(f"{c['aliases'][0]} {verbs[2 * i]} the {nouns[2 * i]}.")
            lines.append(f"Later {c['aliases'][-1]} {verbs[2 * i + 1]} the {nouns[2 * i + 1]} again.")
        (novel_dir / "wiki.txt").write_text(" ".join(lines) + "\n", encoding="utf-8")
        config = make_config(tmp_path, min_mentions=1,
                             models=(ModelSpec("count", "count", {}),))
        report = run_dataset(config, quality=True)
        row = next(r for r in report["novels"][0]["results"]
                   if r["category"] == "proper_names")
        assert row["n"] == len(half)


class TestExportMentions:
    def test_records_reconcile_with_mention_counts(self, two_novel_dataset, tmp_path):
        config = make_config(two_novel_dataset)
        stopwords = load_default_stopwords()
        inputs, _ = discover_novels(two_novel_dataset)
        artifacts = [prepare_novel(i, config, stopwords) for i in inputs]
        out = tmp_path / "mentions.jsonl"
        n = export_mentions(artifacts, out, quality=False)
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == n
        per_entity = {}
        for line in lines:
            rec = json.loads(line)
            assert rec["part"] in ("A", "B")
            assert 0 <= rec["span"][0] < rec["span"][1] <= len(rec["sentence"])
            key = (rec["novel"], rec["entity"])
            per_entity[key] = per_entity.get(key, 0) + 1
        for art in artifacts:
            for eid, spans in art.char_index.spans.items():
                if spans:
                    assert per_entity[(art.novel_id, eid)] == len(spans)

    def test_mention_span_names_the_alias_tokens(self, two_novel_dataset, tmp_path):
        config = make_config(two_novel_dataset)
        stopwords = load_default_stopwords()
        inputs, _ = discover_novels(two_novel_dataset)
        art = prepare_novel(inputs[0], config, stopwords)
        out = tmp_path / "mentions.jsonl"
        export_mentions([art], out, quality=False)
        alias_words = set()
        for ch in art.inventory.characters:
            for seq in ch.alias_token_seqs:
                alias_words.update(seq)
        checked = 0
        for line in out.read_text(encoding="utf-8").splitlines():
            rec = json.loads(line)
            if rec["entity"].startswith("__ent_"):
                span_tokens = rec["sentence"][rec["span"][0]:rec["span"][1]]
                assert all(t in alias_words for t in span_tokens)
                checked += 1
        assert checked > 50
