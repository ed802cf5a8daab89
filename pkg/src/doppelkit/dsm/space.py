"""Entity vector spaces and cosine kernels over dense or sparse rows.

Dense rows are numpy vectors. Sparse rows are plain dicts keyed by
context token, which makes rows from two spaces comparable by key
without a shared index; a dot product only touches shared keys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

PART_IDS = ("A", "B", "novel", "wiki")

SparseRow = dict[str, float]


@dataclass
class EmbeddingSpace:
    part_id: str
    model_id: str
    dim: int
    vectors: dict
    sparse: bool
    excluded: dict[str, str] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.part_id not in PART_IDS:
            raise ValueError(f"part_id must be one of {PART_IDS}")

    def __contains__(self, entity_id: str) -> bool:
        return entity_id in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)

    def entity_ids(self) -> list[str]:
        return sorted(self.vectors)

    def restrict(self, entity_ids) -> "EmbeddingSpace":
        """Subspace over the given ids; ids absent here are ignored."""
        keep = {eid: self.vectors[eid] for eid in entity_ids if eid in self.vectors}
        return EmbeddingSpace(
            part_id=self.part_id,
            model_id=self.model_id,
            dim=self.dim,
            vectors=keep,
            sparse=self.sparse,
            excluded=dict(self.excluded),
            warnings=self.warnings,
        )


def sparse_dot(u: SparseRow, v: SparseRow) -> float:
    if len(v) < len(u):
        u, v = v, u
    return sum(value * v[key] for key, value in u.items() if key in v)


def sparse_norm(u: SparseRow) -> float:
    return math.sqrt(sum(value * value for value in u.values()))


def vector_norm(v) -> float:
    if isinstance(v, dict):
        return sparse_norm(v)
    return float(np.linalg.norm(v))


def cosine(u, v) -> float:
    """Cosine similarity for two dense or two sparse rows.

    Raises ValueError on a zero vector; callers that know the entity
    translate this into a ZeroVector error.
    """
    if isinstance(u, dict) != isinstance(v, dict):
        raise TypeError("cannot mix sparse and dense rows")
    if isinstance(u, dict):
        nu, nv = sparse_norm(u), sparse_norm(v)
        if nu == 0.0 or nv == 0.0:
            raise ValueError("zero vector in cosine")
        return sparse_dot(u, v) / (nu * nv)
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        raise ValueError("zero vector in cosine")
    return float(np.dot(u, v)) / (nu * nv)
