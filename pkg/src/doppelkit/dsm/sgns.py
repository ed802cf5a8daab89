"""Skip-gram with negative sampling, trained by plain SGD over token pairs.

For a center word w with input vector v_w, a context word c with output
vector u_c, and k negatives n_i drawn from the unigram distribution
raised to 0.75, the per-pair objective to maximize is

    ln sigmoid(u_c . v_w) + sum_i ln sigmoid(-u_{n_i} . v_w)

The trainer minimizes the negated objective with per-pair SGD, a dynamic
window (uniform 1..window per center), frequency subsampling that never
drops protected tokens, and a learning rate decaying linearly over the
scheduled token count. Training is single-threaded and fully determined
by the seed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from ..corpus import TaggedDocument
from ..errors import VocabularyTooSmall
from .space import EmbeddingSpace


@dataclass(frozen=True)
class SgnsConfig:
    dim: int = 100
    window: int = 5
    epochs: int = 10
    negatives: int = 5
    initial_lr: float = 0.025
    min_lr: float = 1e-4
    subsample_t: float = 1e-3
    min_count: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError("dim must be >= 2")
        for name in ("window", "epochs", "negatives", "min_count"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if not 0 < self.min_lr <= self.initial_lr:
            raise ValueError("need 0 < min_lr <= initial_lr")
        if self.subsample_t < 0:
            raise ValueError("subsample_t must be >= 0")


@dataclass
class EmbeddingTable:
    words: list[str]
    index: dict[str, int]
    counts: np.ndarray
    input_vectors: np.ndarray
    output_vectors: np.ndarray
    epoch_losses: list[float]
    epoch_pairs: list[int]

    def __contains__(self, word: str) -> bool:
        return word in self.index

    def vector(self, word: str) -> np.ndarray:
        return self.input_vectors[self.index[word]]

    def as_dict(self) -> dict[str, np.ndarray]:
        return {w: self.input_vectors[i] for w, i in self.index.items()}


def _sigmoid(x):
    return 1.0 / (1.0 + np.exp(-x))


def pair_objective(v_w: np.ndarray, u_c: np.ndarray, u_negs: np.ndarray) -> float:
    """Negated per-pair objective (the loss being minimized)."""
    pos = np.log(_sigmoid(float(np.dot(u_c, v_w))))
    neg = np.sum(np.log(_sigmoid(-(u_negs @ v_w)))) if len(u_negs) else 0.0
    return float(-(pos + neg))


def pair_gradients(v_w: np.ndarray, u_c: np.ndarray, u_negs: np.ndarray):
    """Analytic loss gradients for one (center, context, negatives) triple.

    Returns (loss, grad_v, grad_uc, grad_unegs) for the negated
    objective; grad_unegs has one row per negative sample.
    """
    s_pos = float(np.dot(u_c, v_w))
    sig_pos = 1.0 / (1.0 + np.exp(-s_pos))
    s_neg = u_negs @ v_w
    sig_neg = 1.0 / (1.0 + np.exp(-s_neg))

    g_pos = sig_pos - 1.0
    grad_uc = g_pos * v_w
    grad_unegs = sig_neg[:, None] * v_w[None, :]
    grad_v = g_pos * u_c + sig_neg @ u_negs

    loss = -(np.log(sig_pos) + np.sum(np.log1p(-sig_neg)))
    return float(loss), grad_v, grad_uc, grad_unegs


def train_sgns(
    doc: TaggedDocument,
    cfg: SgnsConfig = SgnsConfig(),
    protected: frozenset[str] = frozenset(),
) -> EmbeddingTable:
    """Train an embedding table over the document's full vocabulary.

    ``protected`` surfaces (entity tokens) are exempt from frequency
    subsampling so rare targets keep all their training signal; they
    still obey ``min_count``.
    """
    counts = Counter(t.surface for t in doc.tokens)
    words = sorted((w for w, c in counts.items() if c >= cfg.min_count),
                   key=lambda w: (-counts[w], w))
    if len(words) < cfg.negatives + 1:
        raise VocabularyTooSmall(
            f"vocabulary of {len(words)} cannot support {cfg.negatives} negatives"
        )
    index = {w: i for i, w in enumerate(words)}
    word_counts = np.array([counts[w] for w in words], dtype=np.float64)

    sentences = []
    for sentence in doc.sentences():
        ids = [index[t.surface] for t in sentence if t.surface in index]
        if ids:
            sentences.append(np.array(ids, dtype=np.int64))
    total_tokens = int(sum(len(s) for s in sentences))

    rng = np.random.default_rng(cfg.seed)
    dim = cfg.dim
    inp = (rng.random((len(words), dim)) - 0.5) / dim
    out = np.zeros((len(words), dim), dtype=np.float64)

    noise = word_counts ** 0.75
    noise_cdf = np.cumsum(noise)
    noise_cdf /= noise_cdf[-1]

    if cfg.subsample_t > 0:
        freq = word_counts / word_counts.sum()
        keep = np.minimum(1.0, np.sqrt(cfg.subsample_t / freq))
    else:
        keep = np.ones(len(words))
    for w in protected:
        if w in index:
            keep[index[w]] = 1.0

    k = cfg.negatives
    schedule_total = cfg.epochs * total_tokens + 1
    processed = 0
    epoch_losses: list[float] = []

    epoch_pairs: list[int] = []
    for _ in range(cfg.epochs):
        epoch_loss = 0.0
        n_pairs = 0
        for sentence in sentences:
            if cfg.subsample_t > 0:
                mask = rng.random(len(sentence)) < keep[sentence]
                kept = sentence[mask]
            else:
                kept = sentence
            n = len(kept)
            for pos in range(n):
                lr = max(cfg.min_lr, cfg.initial_lr * (1.0 - processed / schedule_total))
                processed += 1
                w = kept[pos]
                b = int(rng.integers(1, cfg.window + 1))
                lo = max(0, pos - b)
                hi = min(n, pos + b + 1)
                for cpos in range(lo, hi):
                    if cpos == pos:
                        continue
                    c = kept[cpos]
                    negs = np.searchsorted(noise_cdf, rng.random(k))
                    v_w = inp[w]
                    loss, grad_v, grad_uc, grad_unegs = pair_gradients(v_w, out[c], out[negs])
                    epoch_loss += loss
                    n_pairs += 1
                    out[c] -= lr * grad_uc
                    np.add.at(out, negs, -lr * grad_unegs)
                    inp[w] = v_w - lr * grad_v
        epoch_losses.append(epoch_loss)
        epoch_pairs.append(n_pairs)

    return EmbeddingTable(
        words=words,
        index=index,
        counts=word_counts,
        input_vectors=inp,
        output_vectors=out,
        epoch_losses=epoch_losses,
        epoch_pairs=epoch_pairs,
    )


def extract_sgns_space(
    table: EmbeddingTable,
    targets: set[str],
    part_id: str = "A",
    model_id: str = "sgns",
    id_map: dict[str, str] | None = None,
) -> EmbeddingSpace:
    """Input-side vectors of target tokens as a dense space.

    ``id_map`` renames vocabulary tokens to entity ids, for targets that
    were part-tagged before training. Missing targets are excluded and
    reported, never fabricated.
    """
    vectors = {}
    excluded = {}
    for t in sorted(targets):
        name = id_map.get(t, t) if id_map else t
        if t in table.index:
            vectors[name] = table.input_vectors[table.index[t]].copy()
        else:
            excluded[name] = "not_in_vocabulary"
    return EmbeddingSpace(
        part_id=part_id,
        model_id=model_id,
        dim=table.input_vectors.shape[1],
        vectors=vectors,
        sparse=False,
        excluded=excluded,
    )
