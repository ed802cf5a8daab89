"""Tokenizer, CoNLL-U reader, and document splitting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doppelkit.corpus import (
    TaggedDocument,
    Token,
    detokenize,
    parse_conllu,
    split_document,
    tokenize_plain,
)
from doppelkit.errors import EmptyDocument, ParseError, UnsplittableDocument

CONLLU_TWO_SENTENCES = """\
# sent_id = 1
# text = Anna met Bo.
1\tAnna\tAnna\tPROPN\t_\t_\t0\troot\t_\t_
2\tmet\tmeet\tVERB\t_\t_\t1\tdep\t_\t_
3\tBo\tBo\tPROPN\t_\t_\t2\tdep\t_\t_
4\t.\t.\tPUNCT\t_\t_\t1\tdep\t_\t_

# sent_id = 2
1\tThey\tthey\tPRON\t_\t_\t0\troot\t_\t_
2\ttalked\ttalk\tVERB\t_\t_\t1\tdep\t_\t_
3\t.\t.\tPUNCT\t_\t_\t1\tdep\t_\t_
"""

CONLLU_WITH_RANGE = """\
1\tAnna\tAnna\tPROPN\t_\t_\t0\troot\t_\t_
2-3\tdoesn't\t_\t_\t_\t_\t_\t_\t_\t_
2\tdoes\tdo\tAUX\t_\t_\t1\tdep\t_\t_
3\tn't\tnot\tPART\t_\t_\t1\tdep\t_\t_
"""


def naive_conllu_tokens(text):
    """Independent minimal read of plain word lines: (form, lemma, upos)."""
    out = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        head = cols[0]
        if head.isdigit():
            out.append((cols[1], cols[2], cols[3]))
    return out


class TestTokenizePlain:
    def test_two_sentences(self):
        doc = tokenize_plain("Ada ran. Bo sat.")
        assert doc.surfaces() == ["Ada", "ran", ".", "Bo", "sat", "."]
        assert [t.sentence_index for t in doc.tokens] == [0, 0, 0, 1, 1, 1]
        assert doc.tagged is False

    def test_empty_text_rejected(self):
        with pytest.raises(EmptyDocument):
            tokenize_plain("")
        with pytest.raises(EmptyDocument):
            tokenize_plain("  \n\t ")

    def test_single_token(self):
        doc = tokenize_plain("Hello")
        assert len(doc) == 1
        assert doc.n_sentences == 1

    def test_lowercase_follower_does_not_split(self):
        doc = tokenize_plain("Mr. smith waited. Then Mr. Smith left.")
        # "Mr. smith" stays in one sentence; "Mr. Smith" oversplits by design.
        sent = [t.sentence_index for t in doc.tokens]
        assert sent[0] == sent[1] == sent[2]

    def test_apostrophes_stay_in_token(self):
        doc = tokenize_plain("Anna didn't answer.")
        assert "didn't" in doc.surfaces()

    def test_punctuation_is_isolated(self):
        doc = tokenize_plain("Wait, stop; now!")
        assert doc.surfaces() == ["Wait", ",", "stop", ";", "now", "!"]

    def test_surfaces_verbatim(self):
        doc = tokenize_plain("GRAND Hotel 1905")
        assert doc.surfaces() == ["GRAND", "Hotel", "1905"]

    @given(st.text(alphabet="abcZ .!?',\n", max_size=200))
    @settings(max_examples=200)
    def test_invariants_on_arbitrary_text(self, text):
        try:
            doc = tokenize_plain(text)
        except EmptyDocument:
            assert not any(m for m in text.split())
            return
        indices = [t.token_index for t in doc.tokens]
        assert indices == list(range(len(doc)))
        sent = [t.sentence_index for t in doc.tokens]
        assert all(b - a >= 0 for a, b in zip(sent, sent[1:]))
        assert all(t.surface for t in doc.tokens)

    def test_idempotent_on_detokenized_output(self):
        text = "Ada ran fast. Bo sat down! Did Cy see them? Yes."
        doc = tokenize_plain(text)
        again = tokenize_plain(detokenize(doc))
        assert again.surfaces() == doc.surfaces()
        assert [t.sentence_index for t in again.tokens] == [t.sentence_index for t in doc.tokens]


class TestParseConllu:
    def test_two_sentence_fixture(self):
        doc = parse_conllu(CONLLU_TWO_SENTENCES)
        assert len(doc) == 7
        assert doc.tagged is True
        assert doc.n_sentences == 2
        assert doc.tokens[1].lemma == "meet"
        assert doc.tokens[1].upos == "VERB"

    def test_against_naive_reader(self):
        doc = parse_conllu(CONLLU_TWO_SENTENCES)
        expected = naive_conllu_tokens(CONLLU_TWO_SENTENCES)
        assert [(t.surface, t.lemma, t.upos) for t in doc.tokens] == expected

    def test_column_count_error_carries_line(self):
        bad = "1\tAnna\tAnna\tPROPN\t_\t_\t0\troot\t_"  # 9 columns
        with pytest.raises(ParseError) as err:
            parse_conllu(bad)
        assert err.value.line == 1

    def test_range_line_skipped(self):
        doc = parse_conllu(CONLLU_WITH_RANGE)
        assert doc.surfaces() == ["Anna", "does", "n't"]
        assert [(t.surface, t.lemma, t.upos) for t in doc.tokens] == naive_conllu_tokens(
            CONLLU_WITH_RANGE
        )

    def test_empty_input(self):
        with pytest.raises(EmptyDocument):
            parse_conllu("# only a comment\n\n")

    def test_untagged_columns_clear_tagged_flag(self):
        line = "1\tAnna\t_\t_\t_\t_\t0\troot\t_\t_"
        doc = parse_conllu(line)
        assert doc.tagged is False
        assert doc.tokens[0].lemma is None


class TestSplitDocument:
    @staticmethod
    def doc_with_sentence_lengths(lengths):
        tokens = []
        for sent, n in enumerate(lengths):
            for _ in range(n):
                tokens.append(Token(f"w{len(tokens)}", None, None, sent, len(tokens)))
        doc = TaggedDocument("fixture", "novel", tuple(tokens), tagged=False)
        assert [len(s) for s in doc.sentences()] == list(lengths)
        return doc

    def test_even_pair(self):
        doc = self.doc_with_sentence_lengths([10, 10])
        split = split_document(doc)
        assert len(split.part_a) == 10
        assert len(split.part_b) == 10
        assert split.split_sentence_index == 0

    def test_spec_trace_4_4_4_4_5(self):
        doc = self.doc_with_sentence_lengths([4, 4, 4, 4, 5])
        split = split_document(doc)
        assert len(split.part_a) == 12
        assert len(split.part_b) == 9

    def test_single_sentence_rejected(self):
        doc = tokenize_plain("only one sentence here")
        with pytest.raises(UnsplittableDocument):
            split_document(doc)

    def test_round_trip_concatenation(self):
        doc = self.doc_with_sentence_lengths([3, 7, 2, 9])
        split = split_document(doc)
        assert split.part_a.tokens + split.part_b.tokens == doc.tokens

    @given(st.lists(st.integers(min_value=1, max_value=12), min_size=2, max_size=9))
    @settings(max_examples=150)
    def test_argmin_against_brute_force(self, lengths):
        doc = self.doc_with_sentence_lengths(lengths)
        split = split_document(doc)
        total = sum(lengths)
        costs = []
        acc = 0
        for i in range(len(lengths) - 1):
            acc += lengths[i]
            costs.append(abs(acc - (total - acc)))
        achieved = abs(len(split.part_a) - len(split.part_b))
        assert achieved == min(costs)
        # ties break toward the earlier boundary
        first_best = costs.index(min(costs))
        assert len(split.part_a) == sum(lengths[: first_best + 1])

    def test_sentence_rule(self):
        doc = self.doc_with_sentence_lengths([1, 1, 1, 20, 1])
        split = split_document(doc, rule="sentences")
        assert len(split.part_a.sentences()) == 2
        assert len(split.part_b.sentences()) == 3
