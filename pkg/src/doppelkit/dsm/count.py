"""Count-based target vectors: windowed co-occurrence with PPMI weighting.

Each target entity gets a sparse row over the document's most frequent
non-target token types. Windows are symmetric, token-based, and never
cross a sentence boundary. PPMI cells are
``max(0, ln(N * c(t, x) / (c(t) * c(x))))`` with marginals and the total
``N`` taken over the counted target/context pairs.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from ..corpus import TaggedDocument
from ..errors import EmptyVocabulary
from .space import EmbeddingSpace


@dataclass(frozen=True)
class CountModelConfig:
    window: int = 5
    max_context_vocab: int = 10000
    weighting: str = "ppmi"

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if self.max_context_vocab < 1:
            raise ValueError("max_context_vocab must be >= 1")
        if self.weighting not in ("ppmi", "raw"):
            raise ValueError(f"unknown weighting {self.weighting!r}")


def build_count_space(
    doc: TaggedDocument,
    targets: set[str],
    cfg: CountModelConfig = CountModelConfig(),
    part_id: str = "A",
    model_id: str = "count",
) -> EmbeddingSpace:
    type_counts = Counter(t.surface for t in doc.tokens)
    context_counts = {w: c for w, c in type_counts.items() if w not in targets}
    vocab = sorted(context_counts, key=lambda w: (-context_counts[w], w))
    vocab = set(vocab[: cfg.max_context_vocab])
    if not vocab:
        raise EmptyVocabulary(f"{doc.doc_id}: no non-target context types")

    pair_counts: dict[str, Counter] = {t: Counter() for t in targets if type_counts.get(t, 0) > 0}
    excluded = {t: "no_occurrences" for t in targets if type_counts.get(t, 0) == 0}

    for sentence in doc.sentences():
        surfaces = [t.surface for t in sentence]
        for i, w in enumerate(surfaces):
            row = pair_counts.get(w)
            if row is None:
                continue
            lo = max(0, i - cfg.window)
            hi = min(len(surfaces), i + cfg.window + 1)
            for j in range(lo, hi):
                if j == i:
                    continue
                c = surfaces[j]
                if c in vocab:
                    row[c] += 1

    if cfg.weighting == "raw":
        rows = {t: {c: float(n) for c, n in row.items()} for t, row in pair_counts.items()}
    else:
        target_marginal = {t: sum(row.values()) for t, row in pair_counts.items()}
        context_marginal: Counter = Counter()
        for row in pair_counts.values():
            context_marginal.update(row)
        total = sum(target_marginal.values())
        rows = {}
        for t, row in pair_counts.items():
            weighted = {}
            for c, n in row.items():
                pmi = math.log(total * n / (target_marginal[t] * context_marginal[c]))
                if pmi > 0.0:
                    weighted[c] = pmi
            rows[t] = weighted

    vectors = {}
    for t, row in rows.items():
        if row:
            vectors[t] = row
        elif not pair_counts[t]:
            excluded[t] = "no_context"
        else:
            excluded[t] = "no_positive_pmi"

    return EmbeddingSpace(
        part_id=part_id,
        model_id=model_id,
        dim=len(vocab),
        vectors=vectors,
        sparse=True,
        excluded=excluded,
    )
