"""Matching scores: identity, forced swaps, chance level, invariances."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doppelkit.doppel import chance_baseline, doppelganger_score, quality_score
from doppelkit.dsm.space import EmbeddingSpace
from doppelkit.errors import TooFewEntities, ZeroVector


def dense_space(vectors, part_id="A", model_id="m"):
    vecs = {k: np.asarray(v, dtype=np.float64) for k, v in vectors.items()}
    dim = len(next(iter(vecs.values())))
    return EmbeddingSpace(part_id=part_id, model_id=model_id, dim=dim,
                          vectors=vecs, sparse=False)


def random_spaces(rng, n, dim):
    ids = [f"e{i}" for i in range(n)]
    a = dense_space({e: rng.normal(size=dim) for e in ids}, "A")
    b = dense_space({e: rng.normal(size=dim) for e in ids}, "B")
    return a, b


class TestChanceBaseline:
    def test_n2(self):
        assert chance_baseline(2).expected_mrr == pytest.approx(0.75)

    def test_n4(self):
        assert chance_baseline(4).expected_mrr == pytest.approx(25 / 48)

    def test_n1_rejected(self):
        with pytest.raises(TooFewEntities):
            chance_baseline(1)

    def test_decreasing_in_n(self):
        values = [chance_baseline(n).expected_mrr for n in range(2, 40)]
        assert all(a > b for a, b in zip(values, values[1:]))


class TestDoppelgangerScore:
    def test_identical_spaces_are_perfect(self):
        rng = np.random.default_rng(0)
        a, _ = random_spaces(rng, 6, 8)
        result = doppelganger_score(a, a, "proper_names")
        assert result.mrr == 1.0
        assert result.accuracy_at_1 == 1.0
        assert result.n == 6

    def test_forced_swap_scores_half(self):
        a = dense_space({"e1": [1.0, 0.0], "e2": [0.0, 1.0]}, "A")
        b = dense_space({"e1": [0.0, 1.0], "e2": [1.0, 0.0]}, "B")
        result = doppelganger_score(a, b, "proper_names")
        assert result.per_entity_rr == {"e1": 0.5, "e2": 0.5}
        assert result.mrr == 0.5

    def test_mean_mrr_of_random_spaces_matches_analytic_chance(self):
        expected = chance_baseline(10).expected_mrr
        assert expected == pytest.approx(0.2928968, abs=1e-6)
        rng = np.random.default_rng(20240712)
        total = 0.0
        n_seeds = 1000
        for _ in range(n_seeds):
            a, b = random_spaces(rng, 10, 12)
            total += doppelganger_score(a, b, "proper_names").mrr
        assert total / n_seeds == pytest.approx(expected, abs=0.02)

    def test_candidates_are_intersection(self):
        a = dense_space({"e1": [1, 0], "e2": [0, 1], "e3": [1, 1]}, "A")
        b = dense_space({"e2": [0, 1], "e3": [1, 1], "e4": [2, 1]}, "B")
        result = doppelganger_score(a, b, "common_nouns")
        assert result.n == 2
        assert set(result.per_entity_rr) == {"e2", "e3"}

    def test_too_few_entities(self):
        a = dense_space({"e1": [1, 0]}, "A")
        b = dense_space({"e1": [1, 0]}, "B")
        with pytest.raises(TooFewEntities):
            doppelganger_score(a, b, "proper_names")

    def test_zero_vector_raises(self):
        a = dense_space({"e1": [1, 0], "e2": [0, 0]}, "A")
        b = dense_space({"e1": [1, 0], "e2": [0, 1]}, "B")
        with pytest.raises(ZeroVector) as err:
            doppelganger_score(a, b, "proper_names")
        assert err.value.entity == "e2"

    def test_all_tied_space_scores_worst_rank(self):
        # every candidate equally similar: pessimistic ties give rank n
        a = dense_space({"e1": [1, 0], "e2": [1, 0], "e3": [1, 0]}, "A")
        b = dense_space({"e1": [1, 0], "e2": [1, 0], "e3": [1, 0]}, "B")
        result = doppelganger_score(a, b, "proper_names")
        assert result.mrr == pytest.approx(1 / 3)
        assert result.accuracy_at_1 == 0.0

    def test_symmetric_is_mean_of_directions(self):
        rng = np.random.default_rng(5)
        a, b = random_spaces(rng, 8, 6)
        ab = doppelganger_score(a, b, "x", direction="a_to_b")
        ba = doppelganger_score(a, b, "x", direction="b_to_a")
        sym = doppelganger_score(a, b, "x", direction="symmetric")
        assert sym.mrr == pytest.approx(0.5 * (ab.mrr + ba.mrr))
        for e in sym.per_entity_rr:
            assert sym.per_entity_rr[e] == pytest.approx(
                0.5 * (ab.per_entity_rr[e] + ba.per_entity_rr[e])
            )

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=60, deadline=None)
    def test_bounds_and_rotation_scale_invariance(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 9))
        dim = int(rng.integers(2, 7))
        a, b = random_spaces(rng, n, dim)
        base = doppelganger_score(a, b, "proper_names")
        assert base.accuracy_at_1 <= base.mrr <= 1.0
        assert base.mrr >= 1.0 / n

        # one shared orthogonal rotation plus positive per-vector scaling
        q, _ = np.linalg.qr(rng.normal(size=(dim, dim)))
        scale = lambda: float(rng.uniform(0.1, 10.0))
        a2 = dense_space({e: scale() * (q @ v) for e, v in a.vectors.items()}, "A")
        b2 = dense_space({e: scale() * (q @ v) for e, v in b.vectors.items()}, "B")
        rotated = doppelganger_score(a2, b2, "proper_names")
        for e, rr in base.per_entity_rr.items():
            assert rotated.per_entity_rr[e] == pytest.approx(rr)


class TestQualityScore:
    def test_identical_spaces(self):
        rng = np.random.default_rng(1)
        ids = [f"e{i}" for i in range(5)]
        novel = dense_space({e: rng.normal(size=6) for e in ids}, "novel")
        wiki = dense_space(dict(novel.vectors), "wiki")
        result = quality_score(novel, wiki, "proper_names")
        assert result.mrr == 1.0

    def test_wiki_missing_entities_shrinks_candidates(self):
        rng = np.random.default_rng(2)
        ids = [f"e{i}" for i in range(8)]
        novel = dense_space({e: rng.normal(size=6) for e in ids}, "novel")
        wiki = dense_space({e: rng.normal(size=6) for e in ids[:5]}, "wiki")
        result = quality_score(novel, wiki, "proper_names")
        assert result.n == 5

    def test_chance_level_matches_same_baseline(self):
        rng = np.random.default_rng(3)
        total = 0.0
        for _ in range(400):
            ids = [f"e{i}" for i in range(10)]
            novel = dense_space({e: rng.normal(size=8) for e in ids}, "novel")
            wiki = dense_space({e: rng.normal(size=8) for e in ids}, "wiki")
            total += quality_score(novel, wiki, "proper_names").mrr
        assert total / 400 == pytest.approx(chance_baseline(10).expected_mrr, abs=0.03)
