"""Follow-up studies: POS neighbourhoods, correlations, and RSA.

The statistics kernel (Spearman rho plus a seeded permutation test) is
shared by the correlational analysis and RSA. All statistics here are
deterministic given their seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.stats import rankdata

from .corpus import TaggedDocument
from .doppel import DoppelResult
from .dsm.space import EmbeddingSpace, cosine
from .entities import EntityInventory, MentionIndex
from .errors import (
    RequiresTaggedInput,
    TooFewEntities,
    TooFewNovels,
    UndefinedCorrelation,
)

UPOS_COLUMNS = ("ADJ", "ADV", "DET", "NOUN", "PRON", "VERB")
CATEGORY_ROWS = ("proper_names", "common_nouns")
COVARIATE_NAMES = ("length_tokens", "n_characters", "mention_sd")

_WINDOW = 2  # tokens inspected on each side of a mention


@dataclass(frozen=True)
class PosProfile:
    """2x6 co-occurrence counts: rows per category, columns per UPOS tag."""

    counts: np.ndarray

    def __post_init__(self):
        if self.counts.shape != (len(CATEGORY_ROWS), len(UPOS_COLUMNS)):
            raise ValueError("counts must be 2x6")

    def normalized(self) -> np.ndarray:
        out = np.zeros_like(self.counts, dtype=np.float64)
        for i, row in enumerate(self.counts):
            total = row.sum()
            if total > 0:
                out[i] = row / total
        return out

    def normalized_excluding_det(self) -> np.ndarray:
        """Row-relative frequencies over the five non-DET columns."""
        det = UPOS_COLUMNS.index("DET")
        keep = [i for i in range(len(UPOS_COLUMNS)) if i != det]
        sub = self.counts[:, keep].astype(np.float64)
        out = np.zeros_like(sub)
        for i, row in enumerate(sub):
            total = row.sum()
            if total > 0:
                out[i] = row / total
        return out

    def rate(self, category: str, tag: str) -> float:
        return float(self.normalized()[CATEGORY_ROWS.index(category), UPOS_COLUMNS.index(tag)])


@dataclass(frozen=True)
class RsaResult:
    novel_id: str
    model_id: str
    category: str
    rho: float
    n_pairs: int


@dataclass(frozen=True)
class NovelCovariates:
    novel_id: str
    length_tokens: int
    n_characters: int
    mention_sd: float

    def value(self, name: str) -> float:
        return float(getattr(self, name))


def pos_profile(
    docs: list[TaggedDocument],
    mentions: list[MentionIndex],
    inventories: list[EntityInventory],
) -> PosProfile:
    """Count the six tracked tags in 2-token windows around every mention.

    Window positions may hold any token (punctuation included); only
    tokens tagged with one of the six tracked UPOS tags enter the
    matrix. A mention's own tokens never count toward its window.
    """
    by_doc = {}
    for doc in docs:
        if not doc.tagged:
            raise RequiresTaggedInput(f"{doc.doc_id} has no UPOS tags")
        by_doc[doc.doc_id] = doc

    category_by_entity: dict[str, str] = {}
    for inventory in inventories:
        for eid in inventory.character_ids():
            category_by_entity[eid] = "proper_names"
        for eid in inventory.noun_ids():
            category_by_entity[eid] = "common_nouns"

    counts = np.zeros((len(CATEGORY_ROWS), len(UPOS_COLUMNS)), dtype=np.int64)
    col = {tag: i for i, tag in enumerate(UPOS_COLUMNS)}
    for index in mentions:
        doc = by_doc[index.doc_id]
        tokens = doc.tokens
        for eid, spans in index.spans.items():
            category = category_by_entity.get(eid)
            if category is None:
                continue
            row = CATEGORY_ROWS.index(category)
            for start, stop in spans:
                positions = list(range(max(0, start - _WINDOW), start))
                positions += list(range(stop, min(len(tokens), stop + _WINDOW)))
                for pos in positions:
                    tag = tokens[pos].upos
                    if tag in col:
                        counts[row, col[tag]] += 1
    return PosProfile(counts=counts)


def spearman(x, y) -> float:
    """Spearman rho: Pearson correlation of average-ranked values."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1 or len(x) < 3:
        raise ValueError("need two equal-length vectors of at least 3 values")
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise UndefinedCorrelation("constant input vector")
    rx = rankdata(x)
    ry = rankdata(y)
    return _pearson(rx, ry)


def _pearson(a: np.ndarray, b: np.ndarray) -> float:
    a = a - a.mean()
    b = b - b.mean()
    return float((a @ b) / np.sqrt((a @ a) * (b @ b)))


def pearson(x, y) -> float:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise UndefinedCorrelation("constant input vector")
    return _pearson(x, y)


def permutation_pvalue(x, y, n_perm: int = 10000, seed: int = 0) -> float:
    """Two-sided permutation p-value for Spearman rho, deterministic per seed.

    p = (1 + #{perm : |rho_perm| >= |rho_obs|}) / (n_perm + 1)
    """
    rho_obs = spearman(x, y)
    rx = rankdata(np.asarray(x, dtype=np.float64))
    ry = rankdata(np.asarray(y, dtype=np.float64))
    rng = np.random.default_rng(seed)
    perms = rng.permuted(np.tile(ry, (n_perm, 1)), axis=1)

    rx_c = rx - rx.mean()
    perms_c = perms - perms.mean(axis=1, keepdims=True)
    denom = np.sqrt((rx_c @ rx_c) * np.sum(perms_c * perms_c, axis=1))
    rho_perm = (perms_c @ rx_c) / denom
    hits = int(np.sum(np.abs(rho_perm) >= abs(rho_obs) - 1e-12))
    return (1 + hits) / (n_perm + 1)


def rsa(
    space_a: EmbeddingSpace,
    space_b: EmbeddingSpace,
    novel_id: str = "",
    category: str = "",
) -> RsaResult:
    """Correlate the two spaces' within-space pairwise similarity vectors.

    Both spaces must hold the same entity set (apply the intersection
    upstream); one shared entity ordering indexes both triangles.
    """
    ids_a = set(space_a.vectors)
    if ids_a != set(space_b.vectors):
        raise ValueError("rsa requires identical entity sets; intersect upstream")
    order = sorted(ids_a)
    n = len(order)
    if n < 3:
        raise TooFewEntities(f"rsa needs >= 3 entities, got {n}")
    sims_a = _pairwise_similarities(space_a, order)
    sims_b = _pairwise_similarities(space_b, order)
    rho = spearman(sims_a, sims_b)
    return RsaResult(
        novel_id=novel_id,
        model_id=space_a.model_id,
        category=category,
        rho=rho,
        n_pairs=n * (n - 1) // 2,
    )


def _pairwise_similarities(space: EmbeddingSpace, order: list[str]) -> np.ndarray:
    out = []
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            out.append(cosine(space.vectors[order[i]], space.vectors[order[j]]))
    return np.asarray(out)


@dataclass(frozen=True)
class CorrelationCell:
    model_id: str
    category: str
    covariate: str
    n: int
    rho: float | None
    p_perm: float | None
    pearson_r: float | None
    note: str = ""
    points: tuple = ()


@dataclass(frozen=True)
class CorrelationReport:
    cells: tuple[CorrelationCell, ...] = field(default_factory=tuple)


def correlate_scores(
    results: list[DoppelResult],
    covariates: list[NovelCovariates],
    n_perm: int = 10000,
    seed: int = 0,
) -> CorrelationReport:
    """Spearman rho and permutation p per model x category x covariate.

    Scores and covariates are joined on novel id; a constant covariate
    yields an undefined-correlation cell while the rest are computed.
    """
    cov_by_novel = {c.novel_id: c for c in covariates}
    groups: dict[tuple[str, str], list[DoppelResult]] = {}
    joined_novels = set()
    for result in results:
        if result.novel_id in cov_by_novel:
            groups.setdefault((result.model_id, result.category), []).append(result)
            joined_novels.add(result.novel_id)
    if len(joined_novels) < 3:
        raise TooFewNovels(f"joined {len(joined_novels)} novels, need >= 3")

    cells: list[CorrelationCell] = []
    for (model_id, category), rows in sorted(groups.items()):
        rows = sorted(rows, key=lambda r: r.novel_id)
        y = [r.mrr for r in rows]
        for covariate in COVARIATE_NAMES:
            x = [cov_by_novel[r.novel_id].value(covariate) for r in rows]
            points = tuple((r.novel_id, xv, yv) for r, xv, yv in zip(rows, x, y))
            if len(rows) < 3:
                cells.append(CorrelationCell(model_id, category, covariate, len(rows),
                                             None, None, None, "too_few_novels", points))
                continue
            try:
                rho = spearman(x, y)
                p = permutation_pvalue(x, y, n_perm=n_perm, seed=seed)
                r = pearson(x, y)
                cells.append(CorrelationCell(model_id, category, covariate, len(rows),
                                             rho, p, r, "", points))
            except UndefinedCorrelation:
                cells.append(CorrelationCell(model_id, category, covariate, len(rows),
                                             None, None, None, "undefined_correlation", points))
    return CorrelationReport(cells=tuple(cells))
