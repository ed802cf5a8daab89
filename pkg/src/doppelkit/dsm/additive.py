"""Additive background-sum vectors for sparse-data entities.

An entity vector is the plain sum, over all of its mentions, of the
background vectors of surrounding context tokens. The background table
is any word-to-vector mapping; by default the run pipeline trains one on
the other novels of the dataset. Stopwords and tokens without a
background vector contribute nothing.
"""

from __future__ import annotations

import numpy as np

from ..corpus import TaggedDocument
from ..errors import MissingBackground
from .space import EmbeddingSpace


def build_additive_space(
    doc: TaggedDocument,
    targets: set[str],
    background: dict[str, np.ndarray],
    window: int = 5,
    stopwords: frozenset[str] = frozenset(),
    part_id: str = "A",
    model_id: str = "additive",
) -> EmbeddingSpace:
    if not background:
        raise MissingBackground("background table is empty")
    dim = len(next(iter(background.values())))

    warnings: list[str] = []
    non_target_types = {t.surface for t in doc.tokens if t.surface not in targets}
    if non_target_types:
        covered = sum(1 for w in non_target_types if w in background)
        coverage = covered / len(non_target_types)
        if coverage < 0.5:
            warnings.append(
                f"{doc.doc_id}: background covers {coverage:.0%} of non-target types"
            )

    sums = {t: np.zeros(dim) for t in targets}
    seen_context = {t: False for t in targets}
    occurred = set()
    for sentence in doc.sentences():
        surfaces = [t.surface for t in sentence]
        for i, w in enumerate(surfaces):
            if w not in sums:
                continue
            occurred.add(w)
            lo = max(0, i - window)
            hi = min(len(surfaces), i + window + 1)
            for j in range(lo, hi):
                if j == i:
                    continue
                c = surfaces[j]
                if c in stopwords or c in targets:
                    continue
                vec = background.get(c)
                if vec is not None:
                    sums[w] += vec
                    seen_context[w] = True

    vectors = {}
    excluded = {}
    for t in targets:
        if t not in occurred:
            excluded[t] = "no_occurrences"
        elif not seen_context[t]:
            excluded[t] = "no_context"
        else:
            vectors[t] = sums[t]

    return EmbeddingSpace(
        part_id=part_id,
        model_id=model_id,
        dim=dim,
        vectors=vectors,
        sparse=False,
        excluded=excluded,
        warnings=tuple(warnings),
    )
