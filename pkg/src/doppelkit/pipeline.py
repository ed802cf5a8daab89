"""Per-novel processing and dataset-level orchestration.

A run walks each novel through: ingest, alias and noun substitution,
balanced split, per-model space building for the two sides, matching
scores, and RSA; dataset-level correlations and the POS profile follow.
The quality variant swaps the two halves for the whole novel and its
wiki page. Failures are contained per novel (and per model inside a
novel) so one bad input never aborts a dataset run.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .analyses import NovelCovariates, UPOS_COLUMNS, correlate_scores, pos_profile, rsa
from .config import ModelSpec, RunConfig, derive_seed
from .corpus import TaggedDocument, Token, load_document, split_document
from .doppel import chance_baseline, doppelganger_score
from .dsm import (
    build_additive_space,
    build_count_space,
    extract_sgns_space,
    import_contextual_space,
    read_word2vec_text,
    train_sgns,
)
from .entities import (
    CATEGORY_CHARACTERS,
    CATEGORY_NOUNS,
    EntityInventory,
    MentionIndex,
    build_model_document,
    load_characters_json,
    load_default_stopwords,
    select_matched_nouns,
)
from .errors import DoppelkitError, EmptyRun, TooFewEntities, TooFewNovels, UndefinedCorrelation

CATEGORIES = (CATEGORY_CHARACTERS, CATEGORY_NOUNS)


@dataclass(frozen=True)
class NovelInputs:
    novel_id: str
    text_path: Path
    characters_path: Path
    wiki_path: Path | None


@dataclass
class NovelArtifacts:
    novel_id: str
    doc: TaggedDocument
    inventory: EntityInventory
    model_doc: TaggedDocument
    char_index: MentionIndex
    noun_index: MentionIndex
    part_docs: dict[str, TaggedDocument]
    part_counts: dict[str, dict[str, int]]
    kept: dict[str, list[str]]
    excluded_global: dict[str, str]
    covariates: NovelCovariates
    input_files: dict[str, Path]
    split_sentence_index: int | None = None


def discover_novels(dataset_root: str | Path) -> tuple[list[NovelInputs], list[dict]]:
    """Find novel directories; directories without usable inputs are skip records."""
    root = Path(dataset_root)
    if not root.is_dir():
        raise EmptyRun(f"dataset root {root} is not a directory")
    found: list[NovelInputs] = []
    skipped: list[dict] = []
    for novel_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        novel_id = novel_dir.name
        text_path = novel_dir / "novel.conllu"
        if not text_path.exists():
            text_path = novel_dir / "novel.txt"
        if not text_path.exists():
            skipped.append({"novel_id": novel_id, "reason": "missing novel.txt/novel.conllu"})
            continue
        characters_path = novel_dir / "characters.json"
        if not characters_path.exists():
            skipped.append({"novel_id": novel_id, "reason": "missing characters.json"})
            continue
        wiki_path = novel_dir / "wiki.txt"
        found.append(
            NovelInputs(
                novel_id=novel_id,
                text_path=text_path,
                characters_path=characters_path,
                wiki_path=wiki_path if wiki_path.exists() else None,
            )
        )
    return found, skipped


def _entity_token_counts(doc: TaggedDocument, ids) -> dict[str, int]:
    wanted = set(ids)
    counts = {eid: 0 for eid in wanted}
    for tok in doc.tokens:
        if tok.surface in wanted:
            counts[tok.surface] += 1
    return counts


def _population_sd(values) -> float:
    if not values:
        return 0.0
    arr = np.asarray(values, dtype=np.float64)
    return float(np.sqrt(np.mean((arr - arr.mean()) ** 2)))


def prepare_novel(
    inputs: NovelInputs,
    config: RunConfig,
    stopwords: frozenset[str],
    quality: bool = False,
) -> NovelArtifacts:
    """Ingest, substitute, and split one novel into scoreable parts.

    For a doppelganger run the parts are the two halves A and B of the
    novel; for a quality run they are the whole novel and its wiki page.
    """
    doc = load_document(inputs.text_path, doc_id=inputs.novel_id)
    characters = load_characters_json(inputs.characters_path)
    stoplist = None if doc.tagged else stopwords
    inventory = select_matched_nouns(doc, characters, stoplist=stoplist,
                                     novel_id=inputs.novel_id)
    model_doc, char_index, noun_index = build_model_document(doc, inventory)

    input_files = {"novel": inputs.text_path, "characters": inputs.characters_path}
    split_index = None
    if quality:
        if inputs.wiki_path is None:
            raise DoppelkitError("missing wiki.txt")
        wiki_doc = load_document(inputs.wiki_path, doc_id=inputs.novel_id, source_kind="wiki")
        wiki_model_doc, _, _ = build_model_document(wiki_doc, inventory)
        part_docs = {"novel": model_doc, "wiki": wiki_model_doc}
        input_files["wiki"] = inputs.wiki_path
    else:
        split = split_document(model_doc, rule=config.split_rule)
        part_docs = {"A": split.part_a, "B": split.part_b}
        split_index = split.split_sentence_index

    all_ids = inventory.character_ids() + inventory.noun_ids()
    part_counts = {part: _entity_token_counts(d, all_ids) for part, d in part_docs.items()}

    kept: dict[str, list[str]] = {cat: [] for cat in CATEGORIES}
    excluded_global: dict[str, str] = {}
    for eid in all_ids:
        lacking = [part for part in part_counts if part_counts[part][eid] < config.min_mentions]
        if lacking:
            excluded_global[eid] = "below_min_mentions:" + ",".join(sorted(lacking))
        else:
            kept[inventory.category_of(eid)].append(eid)

    kept_chars = kept[CATEGORY_CHARACTERS]
    if len(kept_chars) < 2:
        raise TooFewEntities(
            f"{inputs.novel_id}: only {len(kept_chars)} characters reach "
            f"min_mentions={config.min_mentions} in every part"
        )
    whole_counts = _entity_token_counts(model_doc, inventory.character_ids())
    covariates = NovelCovariates(
        novel_id=inputs.novel_id,
        length_tokens=len(doc),
        n_characters=len(kept_chars),
        mention_sd=_population_sd([whole_counts[eid] for eid in kept_chars]),
    )
    return NovelArtifacts(
        novel_id=inputs.novel_id,
        doc=doc,
        inventory=inventory,
        model_doc=model_doc,
        char_index=char_index,
        noun_index=noun_index,
        part_docs=part_docs,
        part_counts=part_counts,
        kept=kept,
        excluded_global=excluded_global,
        covariates=covariates,
        input_files=input_files,
        split_sentence_index=split_index,
    )


def concat_renamed(
    parts: list[tuple[TaggedDocument, dict[str, str]]],
) -> TaggedDocument:
    """Concatenate documents with per-part surface renames.

    Sentence indices are renumbered so runs never merge across parts;
    token indices restart from zero.
    """
    tokens: list[Token] = []
    sent = -1
    last_key = None
    for part_idx, (doc, rename) in enumerate(parts):
        for tok in doc.tokens:
            key = (part_idx, tok.sentence_index)
            if key != last_key:
                sent += 1
                last_key = key
            surface = rename.get(tok.surface, tok.surface)
            tokens.append(Token(surface, tok.lemma, tok.upos, sent, len(tokens)))
    first = parts[0][0]
    tagged = all(doc.tagged for doc, _ in parts)
    return TaggedDocument(first.doc_id, first.source_kind, tuple(tokens), tagged=tagged)


def build_spaces(
    spec: ModelSpec,
    art: NovelArtifacts,
    targets: list[str],
    config: RunConfig,
    background: dict[str, np.ndarray] | None,
    stopwords: frozenset[str],
    dataset_root: Path | None,
) -> dict[str, "EmbeddingSpace"]:
    """One space per part for the given model, all kept targets at once."""
    part_ids = sorted(art.part_docs)
    target_set = set(targets)

    if spec.kind == "count":
        cfg = spec.count_config()
        return {
            part: build_count_space(art.part_docs[part], target_set, cfg,
                                    part_id=part, model_id=spec.model_id)
            for part in part_ids
        }

    if spec.kind == "sgns":
        seed = derive_seed(config.seed, art.novel_id, spec.model_id)
        cfg = spec.sgns_config(seed)
        renames = {
            part: {eid: f"{eid}@{part}" for eid in target_set} for part in part_ids
        }
        training_doc = concat_renamed([(art.part_docs[p], renames[p]) for p in part_ids])
        protected = frozenset(
            renamed for per_part in renames.values() for renamed in per_part.values()
        )
        table = train_sgns(training_doc, cfg, protected=protected)
        spaces = {}
        for part in part_ids:
            id_map = {f"{eid}@{part}": eid for eid in target_set}
            spaces[part] = extract_sgns_space(
                table, set(id_map), part_id=part, model_id=spec.model_id, id_map=id_map
            )
        return spaces

    if spec.kind == "additive":
        if background is None:
            raise DoppelkitError(f"{spec.model_id}: no background table available")
        window = int(spec.params.get("window", 5))
        return {
            part: build_additive_space(
                art.part_docs[part], target_set, background, window=window,
                stopwords=stopwords, part_id=part, model_id=spec.model_id,
            )
            for part in part_ids
        }

    if spec.kind == "contextual":
        vectors_dir = Path(spec.params.get("vectors_dir", "contextual"))
        if not vectors_dir.is_absolute() and dataset_root is not None:
            vectors_dir = dataset_root / vectors_dir
        path = vectors_dir / f"{art.novel_id}.jsonl"
        if not path.exists():
            raise DoppelkitError(f"{spec.model_id}: missing vectors file {path}")
        spaces = {}
        for part in part_ids:
            space = import_contextual_space(
                path, part, model_id=spec.model_id, novel_filter=art.novel_id
            )
            spaces[part] = space.restrict(targets)
            spaces[part].excluded.update(
                {eid: "no_mention_vectors" for eid in targets if eid not in space.vectors}
            )
        return spaces

    raise DoppelkitError(f"unknown model kind {spec.kind}")


def train_background(
    spec: ModelSpec,
    other_docs: list[TaggedDocument],
    exempt: frozenset[str],
    config: RunConfig,
    novel_id: str,
) -> dict[str, np.ndarray]:
    """Leave-one-out background for the additive model."""
    explicit = spec.params.get("background", "")
    if explicit:
        return read_word2vec_text(explicit)
    if not other_docs:
        return {}
    joined = concat_renamed([(doc, {}) for doc in other_docs])
    seed = derive_seed(config.seed, "background", spec.model_id, novel_id)
    cfg = spec.background_sgns_config(seed)
    table = train_sgns(joined, cfg, protected=exempt)
    return table.as_dict()


def score_novel(
    art: NovelArtifacts,
    config: RunConfig,
    loo_docs: dict[str, list[TaggedDocument]] | None,
    stopwords: frozenset[str],
    dataset_root: Path | None,
) -> dict:
    """All models and categories for one novel; errors recorded, not raised."""
    targets = art.kept[CATEGORY_CHARACTERS] + art.kept[CATEGORY_NOUNS]
    part_ids = sorted(art.part_docs)
    record = {
        "novel_id": art.novel_id,
        "covariates": {
            "length_tokens": art.covariates.length_tokens,
            "n_characters": art.covariates.n_characters,
            "mention_sd": art.covariates.mention_sd,
        },
        "inventory": {
            "n_characters": len(art.inventory.characters),
            "n_common_nouns": len(art.inventory.common_nouns),
            "approximate": art.inventory.approximate,
            "matched_nouns": [
                [n.entity_id, n.lemma, n.matched_character_id]
                for n in art.inventory.common_nouns
            ],
        },
        "mention_counts": {
            part: dict(sorted(counts.items())) for part, counts in art.part_counts.items()
        },
        "excluded": dict(sorted(art.excluded_global.items())),
        "results": [],
        "rsa": [],
        "model_errors": [],
        "model_exclusions": {},
    }

    for spec in config.models:
        background = None
        if spec.kind == "additive":
            docs = (loo_docs or {}).get(art.novel_id, [])
            try:
                background = train_background(
                    spec, docs, frozenset(targets), config, art.novel_id
                )
            except DoppelkitError as exc:
                record["model_errors"].append({"model_id": spec.model_id, "reason": str(exc)})
                continue
        try:
            spaces = build_spaces(spec, art, targets, config, background, stopwords, dataset_root)
        except DoppelkitError as exc:
            record["model_errors"].append({"model_id": spec.model_id, "reason": str(exc)})
            continue

        exclusions = {
            part: dict(sorted(spaces[part].excluded.items())) for part in part_ids
        }
        record["model_exclusions"][spec.model_id] = exclusions

        first, second = part_ids[0], part_ids[1]
        for category in CATEGORIES:
            ids = art.kept[category]
            sa = spaces[first].restrict(ids)
            sb = spaces[second].restrict(ids)
            try:
                sym = doppelganger_score(sa, sb, category, direction="symmetric",
                                         novel_id=art.novel_id)
                ab = doppelganger_score(sa, sb, category, direction="a_to_b",
                                        novel_id=art.novel_id)
                ba = doppelganger_score(sa, sb, category, direction="b_to_a",
                                        novel_id=art.novel_id)
            except DoppelkitError as exc:
                record["model_errors"].append(
                    {"model_id": spec.model_id, "category": category, "reason": str(exc)}
                )
                continue
            picked = {"symmetric": sym, "a_to_b": ab, "b_to_a": ba}[config.direction]
            record["results"].append({
                "model_id": spec.model_id,
                "category": category,
                "direction": config.direction,
                "n": picked.n,
                "mrr": picked.mrr,
                "accuracy_at_1": picked.accuracy_at_1,
                "mrr_a_to_b": ab.mrr,
                "mrr_b_to_a": ba.mrr,
                "chance_mrr": chance_baseline(picked.n).expected_mrr,
                "per_entity_rr": dict(sorted(picked.per_entity_rr.items())),
            })

            shared = sorted(set(sa.vectors) & set(sb.vectors))
            try:
                rsa_result = rsa(sa.restrict(shared), sb.restrict(shared),
                                 novel_id=art.novel_id, category=category)
                record["rsa"].append({
                    "model_id": spec.model_id,
                    "category": category,
                    "rho": rsa_result.rho,
                    "n_pairs": rsa_result.n_pairs,
                })
            except (TooFewEntities, UndefinedCorrelation) as exc:
                record["rsa"].append({
                    "model_id": spec.model_id,
                    "category": category,
                    "rho": None,
                    "n_pairs": len(shared) * (len(shared) - 1) // 2,
                    "note": str(exc),
                })
    return record


def _score_task(args):
    art, config, loo, stopwords, dataset_root = args
    return art.novel_id, score_novel(art, config, loo, stopwords, dataset_root)


def run_dataset(config: RunConfig, quality: bool = False) -> dict:
    """Process a dataset into a report dict; see report.write_report."""
    stopwords = load_default_stopwords()
    dataset_root = Path(config.dataset_root)
    inputs, skipped = discover_novels(dataset_root)

    artifacts: dict[str, NovelArtifacts] = {}
    for inp in inputs:
        if quality and inp.wiki_path is None:
            skipped.append({"novel_id": inp.novel_id, "reason": "missing wiki.txt"})
            continue
        try:
            artifacts[inp.novel_id] = prepare_novel(inp, config, stopwords, quality=quality)
        except DoppelkitError as exc:
            skipped.append({"novel_id": inp.novel_id,
                            "reason": f"{type(exc).__name__}: {exc}"})
    if not artifacts:
        raise EmptyRun("no usable novels in dataset")

    needs_loo = any(
        spec.kind == "additive" and not spec.params.get("background")
        for spec in config.models
    )
    loo: dict[str, list[TaggedDocument]] | None = None
    if needs_loo:
        loo = {
            novel_id: [a.model_doc for other, a in sorted(artifacts.items()) if other != novel_id]
            for novel_id in artifacts
        }

    ordered = [artifacts[nid] for nid in sorted(artifacts)]
    tasks = [(art, config, loo, stopwords, dataset_root) for art in ordered]
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = dict(pool.map(_score_task, tasks))
        novel_records = [results[art.novel_id] for art in ordered]
    else:
        novel_records = [score_novel(*task) for task in tasks]

    report = {
        "schema": "doppelkit/1",
        "kind": "quality" if quality else "run",
        "config": config.to_dict(),
        "novels": novel_records,
        "skipped": sorted(skipped, key=lambda s: s["novel_id"]),
        "dataset": {
            "n_novels_found": len(inputs),
            "n_novels_processed": len(novel_records),
            "approximate_novels": sorted(
                a.novel_id for a in ordered if a.inventory.approximate
            ),
        },
    }
    report["aggregates"] = _aggregate(novel_records)
    report["correlations"] = _correlations(novel_records, ordered, config)
    report["pos_profile"] = _pos_profile_block(ordered)
    report["manifest"] = _manifest(ordered, dataset_root)
    return report


def _aggregate(novel_records: list[dict]) -> dict:
    doppel: dict[tuple[str, str], list[dict]] = {}
    rsa_rows: dict[tuple[str, str], list[float]] = {}
    for record in novel_records:
        for row in record["results"]:
            doppel.setdefault((row["model_id"], row["category"]), []).append(row)
        for row in record["rsa"]:
            if row.get("rho") is not None:
                rsa_rows.setdefault((row["model_id"], row["category"]), []).append(row["rho"])
    return {
        "doppel": [
            {
                "model_id": model_id,
                "category": category,
                "n_novels": len(rows),
                "mean_mrr": float(np.mean([r["mrr"] for r in rows])),
                "mean_accuracy_at_1": float(np.mean([r["accuracy_at_1"] for r in rows])),
                "mean_chance_mrr": float(np.mean([r["chance_mrr"] for r in rows])),
            }
            for (model_id, category), rows in sorted(doppel.items())
        ],
        "rsa": [
            {
                "model_id": model_id,
                "category": category,
                "n_novels": len(rhos),
                "mean_rho": float(np.mean(rhos)),
            }
            for (model_id, category), rhos in sorted(rsa_rows.items())
        ],
    }


def _correlations(novel_records: list[dict], ordered, config: RunConfig) -> dict:
    from .doppel import DoppelResult

    results = []
    for record in novel_records:
        for row in record["results"]:
            results.append(
                DoppelResult(
                    novel_id=record["novel_id"], model_id=row["model_id"],
                    category=row["category"], direction=row["direction"],
                    per_entity_rr={}, accuracy_at_1=row["accuracy_at_1"],
                    mrr=row["mrr"], n=row["n"],
                )
            )
    covariates = [art.covariates for art in ordered]
    try:
        report = correlate_scores(results, covariates,
                                  n_perm=config.n_perm, seed=config.seed)
    except TooFewNovels as exc:
        return {"note": str(exc), "cells": []}
    cells = []
    for cell in report.cells:
        cells.append({
            "model_id": cell.model_id,
            "category": cell.category,
            "covariate": cell.covariate,
            "n": cell.n,
            "rho": cell.rho,
            "p_perm": cell.p_perm,
            "pearson_r": cell.pearson_r,
            "note": cell.note,
            "points": [[novel, float(x), float(y)] for novel, x, y in cell.points],
        })
    return {"note": "", "cells": cells}


def _pos_profile_block(ordered: list[NovelArtifacts]) -> dict:
    tagged = [art for art in ordered if art.doc.tagged]
    if not tagged:
        return {"note": "no tagged novels", "counts": None}
    docs = [art.doc for art in tagged]
    mentions = []
    for art in tagged:
        mentions.append(art.char_index)
        mentions.append(art.noun_index)
    inventories = [art.inventory for art in tagged]
    profile = pos_profile(docs, mentions, inventories)
    return {
        "note": "",
        "columns": list(UPOS_COLUMNS),
        "rows": ["proper_names", "common_nouns"],
        "counts": profile.counts.tolist(),
        "normalized": profile.normalized().tolist(),
        "normalized_excluding_det": profile.normalized_excluding_det().tolist(),
        "n_novels": len(tagged),
    }


def _manifest(ordered: list[NovelArtifacts], dataset_root: Path) -> dict:
    manifest = {}
    for art in ordered:
        for path in art.input_files.values():
            digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
            try:
                key = str(Path(path).relative_to(dataset_root))
            except ValueError:
                key = str(path)
            manifest[key] = f"sha256:{digest}"
    return dict(sorted(manifest.items()))


def export_mentions(artifacts: list[NovelArtifacts], out_path: str | Path, quality: bool) -> int:
    """Write mention contexts as JSON Lines for the contextual extractor.

    Each record carries the mention's sentence (original surfaces) and
    the mention span within that sentence. Returns the record count.
    """
    import json

    n = 0
    with open(out_path, "w", encoding="utf-8") as fh:
        for art in sorted(artifacts, key=lambda a: a.novel_id):
            wiki_doc = None
            if quality and "wiki" in art.input_files:
                wiki_doc = load_document(art.input_files["wiki"],
                                         doc_id=art.novel_id, source_kind="wiki")
            sources = [("novel" if quality else None, art.doc, art.char_index, art.noun_index)]
            if wiki_doc is not None:
                wiki_model, wiki_chars, wiki_nouns = build_model_document(wiki_doc, art.inventory)
                sources.append(("wiki", wiki_doc, wiki_chars, wiki_nouns))

            for fixed_part, doc, char_index, noun_index in sources:
                starts: dict[int, int] = {}
                sents: dict[int, list[str]] = {}
                for sentence in doc.sentences():
                    sid = sentence[0].sentence_index
                    starts[sid] = sentence[0].token_index
                    sents[sid] = [t.surface for t in sentence]
                mention_counter: dict[tuple[str, str], int] = {}
                for index in (char_index, noun_index):
                    for eid in sorted(index.spans):
                        for start, stop in index.spans[eid]:
                            sid = doc.tokens[start].sentence_index
                            if fixed_part is not None:
                                part = fixed_part
                            else:
                                part = "A" if sid <= art.split_sentence_index else "B"
                            key = (eid, part)
                            mention = mention_counter.get(key, 0)
                            mention_counter[key] = mention + 1
                            rel = start - starts[sid]
                            fh.write(json.dumps({
                                "novel": art.novel_id,
                                "part": part,
                                "entity": eid,
                                "mention": mention,
                                "sentence": sents[sid],
                                "span": [rel, rel + (stop - start)],
                            }, ensure_ascii=False) + "\n")
                            n += 1
    return n
