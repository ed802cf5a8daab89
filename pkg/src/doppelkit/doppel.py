"""Cross-half matching of co-referring entity vectors.

For every entity present in both spaces, the query vector from one side
is ranked by cosine similarity against all candidate vectors on the
other side; the reciprocal rank of the true co-referent is the entity's
score. Ties take the worst rank of the tied block, so degenerate spaces
score at chance or below instead of spuriously well.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsm.space import EmbeddingSpace, cosine, vector_norm
from .errors import TooFewEntities, ZeroVector

DIRECTIONS = ("a_to_b", "b_to_a", "symmetric")


@dataclass(frozen=True)
class DoppelResult:
    novel_id: str
    model_id: str
    category: str
    direction: str
    per_entity_rr: dict[str, float]
    accuracy_at_1: float
    mrr: float
    n: int


@dataclass(frozen=True)
class BaselineEstimate:
    n: int
    expected_mrr: float


def chance_baseline(n: int) -> BaselineEstimate:
    """Expected MRR of a uniformly random ranking: H_n / n."""
    if n < 2:
        raise TooFewEntities(f"chance baseline needs n >= 2, got {n}")
    harmonic = sum(1.0 / i for i in range(1, n + 1))
    return BaselineEstimate(n=n, expected_mrr=harmonic / n)


def _check_norms(space: EmbeddingSpace, candidates: list[str]) -> None:
    for eid in candidates:
        if vector_norm(space.vectors[eid]) == 0.0:
            raise ZeroVector(eid)


def _directional_rr(
    query_space: EmbeddingSpace, cand_space: EmbeddingSpace, candidates: list[str]
) -> dict[str, float]:
    rr: dict[str, float] = {}
    for eid in candidates:
        query = query_space.vectors[eid]
        sims = {x: cosine(query, cand_space.vectors[x]) for x in candidates}
        own = sims[eid]
        worse_or_tied = sum(1 for x in candidates if x != eid and sims[x] >= own)
        rr[eid] = 1.0 / (1 + worse_or_tied)
    return rr


def doppelganger_score(
    space_a: EmbeddingSpace,
    space_b: EmbeddingSpace,
    category: str,
    direction: str = "symmetric",
    novel_id: str = "",
) -> DoppelResult:
    """Score cross-half matching over the entities present in both spaces."""
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")
    candidates = sorted(set(space_a.vectors) & set(space_b.vectors))
    if len(candidates) < 2:
        raise TooFewEntities(
            f"need >= 2 shared entities, got {len(candidates)} "
            f"({space_a.model_id}, {category})"
        )
    _check_norms(space_a, candidates)
    _check_norms(space_b, candidates)

    if direction == "a_to_b":
        rr = _directional_rr(space_a, space_b, candidates)
    elif direction == "b_to_a":
        rr = _directional_rr(space_b, space_a, candidates)
    else:
        ab = _directional_rr(space_a, space_b, candidates)
        ba = _directional_rr(space_b, space_a, candidates)
        rr = {e: 0.5 * (ab[e] + ba[e]) for e in candidates}

    mrr = sum(rr.values()) / len(candidates)
    acc1 = sum(1 for v in rr.values() if v == 1.0) / len(candidates)
    return DoppelResult(
        novel_id=novel_id,
        model_id=space_a.model_id,
        category=category,
        direction=direction,
        per_entity_rr=rr,
        accuracy_at_1=acc1,
        mrr=mrr,
        n=len(candidates),
    )


def quality_score(
    space_novel: EmbeddingSpace,
    space_wiki: EmbeddingSpace,
    category: str,
    direction: str = "symmetric",
    novel_id: str = "",
) -> DoppelResult:
    """Same contract as doppelganger_score, for novel/wiki space pairs."""
    return doppelganger_score(
        space_novel, space_wiki, category, direction=direction, novel_id=novel_id
    )
