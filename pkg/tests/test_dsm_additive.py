"""Additive background-sum model: definitional cases and linearity."""

import numpy as np
import pytest

from doppelkit.corpus import TaggedDocument, Token
from doppelkit.dsm import build_additive_space
from doppelkit.errors import MissingBackground


def make_doc(sentences, doc_id="doc"):
    tokens = []
    for sent, words in enumerate(sentences):
        for w in words:
            tokens.append(Token(w, None, None, sent, len(tokens)))
    return TaggedDocument(doc_id, "novel", tokens=tuple(tokens), tagged=False)


BG = {
    "x": np.array([1.0, 0.0, 2.0]),
    "y": np.array([0.0, 3.0, 1.0]),
    "z": np.array([5.0, 5.0, 5.0]),
    "w": np.array([-1.0, 0.5, 0.0]),
}


class TestAdditive:
    def test_single_mention_sums_context_vectors(self):
        doc = make_doc([["x", "T", "y"]])
        space = build_additive_space(doc, {"T"}, BG, window=2)
        np.testing.assert_array_equal(space.vectors["T"], BG["x"] + BG["y"])

    def test_duplicate_mention_doubles_vector(self):
        doc = make_doc([["x", "T", "y"], ["x", "T", "y"]])
        space = build_additive_space(doc, {"T"}, BG, window=2)
        np.testing.assert_array_equal(space.vectors["T"], 2 * (BG["x"] + BG["y"]))

    def test_three_mentions_match_independent_scan(self):
        doc = make_doc([
            ["z", "w", "T", "x"],
            ["y", "y", "z", "T", "w", "x", "z"],
            ["T", "z"],
        ])
        window = 5
        space = build_additive_space(doc, {"T"}, BG, window=window)

        expected = np.zeros(3)
        sentences = [[t.surface for t in s] for s in doc.sentences()]
        for words in sentences:
            for i, word in enumerate(words):
                if word != "T":
                    continue
                for j, other in enumerate(words):
                    if j != i and other != "T" and abs(j - i) <= window and other in BG:
                        expected += BG[other]
        np.testing.assert_allclose(space.vectors["T"], expected)

    def test_stopwords_and_unknown_contexts_skipped(self):
        doc = make_doc([["the", "T", "unknowntoken", "x"]])
        space = build_additive_space(doc, {"T"}, BG, window=3, stopwords=frozenset({"the"}))
        np.testing.assert_array_equal(space.vectors["T"], BG["x"])

    def test_window_respects_sentence_boundary(self):
        doc = make_doc([["x", "T"], ["y", "y"]])
        space = build_additive_space(doc, {"T"}, BG, window=5)
        np.testing.assert_array_equal(space.vectors["T"], BG["x"])

    def test_zero_context_entity_excluded(self):
        doc = make_doc([["unknowntoken", "T"], ["x", "y", "z"]])
        space = build_additive_space(doc, {"T"}, BG, window=5)
        assert space.vectors == {}
        assert space.excluded["T"] == "no_context"

    def test_absent_entity_reported(self):
        doc = make_doc([["x", "y"]])
        space = build_additive_space(doc, {"T"}, BG, window=2)
        assert space.excluded["T"] == "no_occurrences"

    def test_empty_background_rejected(self):
        doc = make_doc([["x", "T"]])
        with pytest.raises(MissingBackground):
            build_additive_space(doc, {"T"}, {}, window=2)

    def test_low_coverage_warning(self):
        doc = make_doc([["q1", "T", "q2", "q3", "x"]])
        space = build_additive_space(doc, {"T"}, BG, window=1)
        assert space.warnings
        assert "covers" in space.warnings[0]

    def test_linear_in_mentions(self):
        part1 = [["x", "T", "y"], ["w", "z"]]
        part2 = [["z", "T"], ["T", "w", "x"]]
        s1 = build_additive_space(make_doc(part1), {"T"}, BG, window=2)
        s2 = build_additive_space(make_doc(part2), {"T"}, BG, window=2)
        joint = build_additive_space(make_doc(part1 + part2), {"T"}, BG, window=2)
        np.testing.assert_allclose(joint.vectors["T"], s1.vectors["T"] + s2.vectors["T"])
