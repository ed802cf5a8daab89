"""Command line interface.

Exit codes: 0 full success, 2 partial success (novels or models were
skipped), 1 fatal error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .config import RunConfig, default_models, load_config
from .corpus import load_document
from .entities import bootstrap_characters, dump_characters_json
from .errors import DoppelkitError
from .pipeline import discover_novels, export_mentions, prepare_novel, run_dataset
from .entities import load_default_stopwords
from .report import emit_plots, load_report, write_report
from .synth import write_dataset


@click.group()
def main():
    """Split-half reference matching for characters and common nouns."""


def _resolve_config(config_path, dataset, out, seed) -> RunConfig:
    if config_path:
        config = load_config(config_path)
    else:
        config = RunConfig(dataset_root=dataset or "", models=default_models())
    config = config.replace(dataset_root=dataset, output_dir=out, seed=seed)
    if not config.dataset_root:
        raise DoppelkitError("no dataset directory given (config [run].dataset or --dataset)")
    return config


def _partial(report: dict) -> bool:
    if report["skipped"]:
        return True
    return any(novel["model_errors"] for novel in report["novels"])


def _run_command(quality: bool, config_path, dataset, out, seed, export):
    try:
        config = _resolve_config(config_path, dataset, out, seed)
        report = run_dataset(config, quality=quality)
    except DoppelkitError as exc:
        click.echo(f"fatal: {exc}", err=True)
        sys.exit(1)
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    name = "quality_report.json" if quality else "report.json"
    report_path = out_dir / name
    write_report(report, report_path)
    emit_plots(report, out_dir / "plots")

    if export:
        stopwords = load_default_stopwords()
        inputs, _ = discover_novels(config.dataset_root)
        artifacts = []
        for inp in inputs:
            if quality and inp.wiki_path is None:
                continue
            try:
                artifacts.append(prepare_novel(inp, config, stopwords, quality=quality))
            except DoppelkitError:
                continue
        mentions_path = out_dir / ("mentions_quality.jsonl" if quality else "mentions.jsonl")
        count = export_mentions(artifacts, mentions_path, quality=quality)
        click.echo(f"exported {count} mention contexts to {mentions_path}")

    click.echo(f"report written to {report_path}")
    for novel in report["novels"]:
        for row in novel["results"]:
            click.echo(
                f"  {novel['novel_id']} {row['model_id']:>10} {row['category']:>13} "
                f"n={row['n']:>3} mrr={row['mrr']:.3f} acc1={row['accuracy_at_1']:.3f} "
                f"chance={row['chance_mrr']:.3f}"
            )
    for skip in report["skipped"]:
        click.echo(f"  skipped {skip['novel_id']}: {skip['reason']}")
    sys.exit(2 if _partial(report) else 0)


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--dataset", type=click.Path(), default=None)
@click.option("--out", type=click.Path(), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--export-mentions", "export", is_flag=True, default=False,
              help="Also write mention contexts for the contextual extractor.")
def run(config_path, dataset, out, seed, export):
    """Doppelganger test: match entity vectors across novel halves."""
    _run_command(False, config_path, dataset, out, seed, export)


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--dataset", type=click.Path(), default=None)
@click.option("--out", type=click.Path(), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--export-mentions", "export", is_flag=True, default=False)
def quality(config_path, dataset, out, seed, export):
    """Quality test: match the novel against its wiki page."""
    _run_command(True, config_path, dataset, out, seed, export)


@main.command()
@click.option("--out", type=click.Path(), required=True)
@click.option("--novels", type=int, default=2, show_default=True)
@click.option("--characters", type=int, default=8, show_default=True)
@click.option("--tokens", type=int, default=6000, show_default=True)
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--wiki/--no-wiki", default=False, show_default=True)
@click.option("--conllu/--no-conllu", default=True, show_default=True)
@click.option("--character-sweep", default=None,
              help="Comma-separated entity counts, e.g. 5,10,20,40; one novel per count.")
@click.option("--replicates", type=int, default=1, show_default=True,
              help="Repeats of the sweep list with fresh seeds.")
def synth(out, novels, characters, tokens, seed, wiki, conllu, character_sweep, replicates):
    """Generate a synthetic dataset with planted characters and nouns."""
    counts = None
    if character_sweep:
        base = [int(v) for v in character_sweep.split(",")]
        counts = [c for _ in range(replicates) for c in base]
    ids = write_dataset(
        out, n_novels=novels, n_characters=characters, target_tokens=tokens,
        seed=seed, with_wiki=wiki, with_conllu=conllu, character_counts=counts,
    )
    click.echo(f"wrote {len(ids)} novels under {out}: {', '.join(ids)}")


@main.command("emit-plots")
@click.option("--report", "report_path", type=click.Path(exists=True), required=True)
@click.option("--out", type=click.Path(), required=True)
def emit_plots_cmd(report_path, out):
    """Re-emit plot CSVs from an existing report."""
    try:
        report = load_report(report_path)
    except DoppelkitError as exc:
        click.echo(f"fatal: {exc}", err=True)
        sys.exit(1)
    files = emit_plots(report, out)
    for path in files:
        click.echo(str(path))


@main.command("bootstrap-characters")
@click.option("--novel", "novel_path", type=click.Path(exists=True), required=True)
@click.option("--out", type=click.Path(), required=True)
@click.option("--max-characters", type=int, default=15, show_default=True)
@click.option("--min-count", type=int, default=5, show_default=True)
def bootstrap_characters_cmd(novel_path, out, max_characters, min_count):
    """Draft a characters.json from capitalization patterns (curate by hand)."""
    doc = load_document(novel_path)
    drafts = bootstrap_characters(doc, max_characters=max_characters, min_count=min_count)
    dump_characters_json(drafts, out)
    click.echo(f"wrote {len(drafts)} draft characters to {out}")


if __name__ == "__main__":
    main()
