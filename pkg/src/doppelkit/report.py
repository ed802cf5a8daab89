"""Report serialization: canonical JSON plus plot-ready CSV files.

The JSON writer is canonical (sorted keys, fixed indentation, no
timestamps), so identical runs produce byte-identical reports. CSV
floats are written with ``repr`` and survive a parse round-trip exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError


def write_report(report: dict, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def load_report(path: str | Path) -> dict:
    try:
        report = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", line=exc.lineno) from None
    if not isinstance(report, dict) or report.get("schema") != "doppelkit/1":
        raise ParseError(f"{path}: not a doppelkit/1 report")
    return report


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def emit_plots(report: dict, out_dir: str | Path) -> list[Path]:
    """One CSV per figure analogue; returns the files written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    scores_name = "quality_scores.csv" if report.get("kind") == "quality" else "doppel_scores.csv"
    rows = []
    for novel in report.get("novels", []):
        for row in novel["results"]:
            rows.append([
                novel["novel_id"], row["model_id"], row["category"], row["n"],
                row["mrr"], row["accuracy_at_1"], row["mrr_a_to_b"], row["mrr_b_to_a"],
                row["chance_mrr"],
            ])
    path = out_dir / scores_name
    _write_csv(path, ["novel", "model", "category", "n", "mrr", "accuracy_at_1",
                      "mrr_a_to_b", "mrr_b_to_a", "chance_mrr"], rows)
    written.append(path)

    rows = []
    for novel in report.get("novels", []):
        for row in novel["rsa"]:
            rows.append([novel["novel_id"], row["model_id"], row["category"],
                         row.get("rho"), row["n_pairs"], row.get("note", "")])
    path = out_dir / "rsa.csv"
    _write_csv(path, ["novel", "model", "category", "rho", "n_pairs", "note"], rows)
    written.append(path)

    correlations = report.get("correlations", {})
    rows = []
    points = []
    for cell in correlations.get("cells", []):
        rows.append([cell["model_id"], cell["category"], cell["covariate"], cell["n"],
                     cell["rho"], cell["p_perm"], cell["pearson_r"], cell["note"]])
        for novel, x, y in cell["points"]:
            points.append([cell["model_id"], cell["category"], cell["covariate"],
                           novel, x, y])
    path = out_dir / "correlations.csv"
    _write_csv(path, ["model", "category", "covariate", "n", "rho", "p_perm",
                      "pearson_r", "note"], rows)
    written.append(path)
    path = out_dir / "correlation_points.csv"
    _write_csv(path, ["model", "category", "covariate", "novel", "x", "y"], points)
    written.append(path)

    profile = report.get("pos_profile", {})
    rows = []
    if profile.get("counts") is not None:
        columns = profile["columns"]
        for r, category in enumerate(profile["rows"]):
            for c, tag in enumerate(columns):
                rows.append([
                    category, tag, profile["counts"][r][c],
                    profile["normalized"][r][c],
                    None if tag == "DET"
                    else profile["normalized_excluding_det"][r][c - (1 if c > columns.index("DET") else 0)],
                ])
    path = out_dir / "pos_profile.csv"
    _write_csv(path, ["category", "tag", "count", "rate", "rate_excluding_det"], rows)
    written.append(path)

    rows = []
    for novel in report.get("novels", []):
        cov = novel["covariates"]
        rows.append([novel["novel_id"], cov["length_tokens"], cov["n_characters"],
                     cov["mention_sd"]])
    path = out_dir / "covariates.csv"
    _write_csv(path, ["novel", "length_tokens", "n_characters", "mention_sd"], rows)
    written.append(path)

    return written
