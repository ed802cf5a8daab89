"""Distributional model builders producing entity embedding spaces."""

from .additive import build_additive_space
from .contextual import import_contextual_space, iter_interchange, write_interchange
from .count import CountModelConfig, build_count_space
from .sgns import (
    EmbeddingTable,
    SgnsConfig,
    extract_sgns_space,
    pair_gradients,
    pair_objective,
    train_sgns,
)
from .space import EmbeddingSpace, cosine, vector_norm
from .vectors_io import read_word2vec_text, write_word2vec_text

__all__ = [
    "EmbeddingSpace",
    "cosine",
    "vector_norm",
    "CountModelConfig",
    "build_count_space",
    "SgnsConfig",
    "EmbeddingTable",
    "train_sgns",
    "extract_sgns_space",
    "pair_objective",
    "pair_gradients",
    "build_additive_space",
    "import_contextual_space",
    "iter_interchange",
    "write_interchange",
    "read_word2vec_text",
    "write_word2vec_text",
]
