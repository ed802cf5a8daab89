"""Document ingestion: tokenization, CoNLL-U parsing, and half-splitting.

A document is an ordered token sequence with sentence structure. Two
ingestion paths exist: a deliberately simple rule-based tokenizer for
plain text, and a CoNLL-U reader for pre-tagged input. Tagged input is
the recommended path for every analysis that needs lemmas or UPOS tags.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import EmptyDocument, ParseError, UnsplittableDocument

SOURCE_KINDS = ("novel", "wiki")

# Maximal runs of letters, digits, or apostrophes form word tokens; any
# other non-space character is a one-character punctuation token.
_WORD_RE = re.compile(r"(?:[^\W_]|['’])+")
_TOKEN_RE = re.compile(r"(?:[^\W_]|['’])+|\S")
_SENTENCE_FINAL = frozenset(".!?")


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str | None
    upos: str | None
    sentence_index: int
    token_index: int


@dataclass(frozen=True)
class TaggedDocument:
    doc_id: str
    source_kind: str
    tokens: tuple[Token, ...]
    tagged: bool

    def __post_init__(self):
        if self.source_kind not in SOURCE_KINDS:
            raise ValueError(f"source_kind must be one of {SOURCE_KINDS}")
        prev_tok = -1
        prev_sent = -1
        for tok in self.tokens:
            if not tok.surface:
                raise ValueError("token surface must be non-empty")
            if tok.token_index <= prev_tok:
                raise ValueError("token_index must be strictly increasing")
            if tok.sentence_index < prev_sent:
                raise ValueError("sentence_index must be non-decreasing")
            prev_tok = tok.token_index
            prev_sent = tok.sentence_index
        if self.tagged and any(t.lemma is None or t.upos is None for t in self.tokens):
            raise ValueError("tagged document has tokens without lemma/upos")

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def n_sentences(self) -> int:
        return len(self.sentence_ids())

    def sentence_ids(self) -> list[int]:
        """Distinct sentence indices in document order."""
        ids: list[int] = []
        for tok in self.tokens:
            if not ids or tok.sentence_index != ids[-1]:
                ids.append(tok.sentence_index)
        return ids

    def sentences(self) -> list[list[Token]]:
        """Tokens grouped into their contiguous sentence runs."""
        out: list[list[Token]] = []
        current_id: int | None = None
        for tok in self.tokens:
            if tok.sentence_index != current_id:
                out.append([])
                current_id = tok.sentence_index
            out[-1].append(tok)
        return out

    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]


@dataclass(frozen=True)
class SplitDocument:
    part_a: TaggedDocument
    part_b: TaggedDocument
    split_sentence_index: int


def tokenize_plain(text: str, doc_id: str = "doc", source_kind: str = "novel") -> TaggedDocument:
    """Tokenize raw text into an untagged document.

    Word tokens are maximal runs of letters, digits, and apostrophes;
    every other non-space character becomes its own token. A sentence
    ends after ``.``, ``!``, or ``?`` when followed by whitespace and an
    uppercase letter, or by the end of the text. Surfaces are kept
    verbatim; no case folding happens here.
    """
    tokens: list[Token] = []
    sentence = 0
    for match in _TOKEN_RE.finditer(text):
        surface = match.group()
        tokens.append(Token(surface, None, None, sentence, len(tokens)))
        if surface in _SENTENCE_FINAL and _ends_sentence(text, match.end()):
            sentence += 1
    if not tokens:
        raise EmptyDocument(f"{doc_id}: no tokens in input text")
    return TaggedDocument(doc_id, source_kind, tuple(tokens), tagged=False)


def _ends_sentence(text: str, pos: int) -> bool:
    rest = text[pos:]
    if not rest.strip():
        return True
    if not rest[0].isspace():
        return False
    return rest.lstrip()[0].isupper()


def parse_conllu(text: str, doc_id: str = "doc", source_kind: str = "novel") -> TaggedDocument:
    """Parse CoNLL-U text into a tagged document.

    Token lines must have ten tab-separated columns. Multiword-token
    range lines (id like ``3-4``) and empty nodes (id like ``3.1``) are
    skipped in favor of the plain word lines. ``_`` in the LEMMA or UPOS
    column is read as missing; the document counts as tagged only when
    no token has a missing lemma or tag.
    """
    tokens: list[Token] = []
    sentence = 0
    sentence_open = False
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\n")
        if not line.strip():
            if sentence_open:
                sentence += 1
                sentence_open = False
            continue
        if line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ParseError(f"expected 10 columns, got {len(cols)}", line=line_no)
        token_id = cols[0]
        if "-" in token_id or "." in token_id:
            continue
        if not token_id.isdigit():
            raise ParseError(f"bad token id {token_id!r}", line=line_no)
        surface = cols[1]
        if not surface:
            raise ParseError("empty FORM column", line=line_no)
        lemma = cols[2] if cols[2] != "_" else None
        upos = cols[3] if cols[3] != "_" else None
        tokens.append(Token(surface, lemma, upos, sentence, len(tokens)))
        sentence_open = True
    if not tokens:
        raise EmptyDocument(f"{doc_id}: no token lines in CoNLL-U input")
    tagged = all(t.lemma is not None and t.upos is not None for t in tokens)
    return TaggedDocument(doc_id, source_kind, tuple(tokens), tagged=tagged)


def load_document(path: str | Path, doc_id: str | None = None, source_kind: str = "novel") -> TaggedDocument:
    """Load ``.txt`` via the rule tokenizer or ``.conllu`` via the reader."""
    path = Path(path)
    if doc_id is None:
        doc_id = path.stem
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".conllu":
        return parse_conllu(text, doc_id=doc_id, source_kind=source_kind)
    return tokenize_plain(text, doc_id=doc_id, source_kind=source_kind)


def detokenize(doc: TaggedDocument) -> str:
    """Join surfaces with single spaces; inverse enough for re-tokenization."""
    return " ".join(t.surface for t in doc.tokens)


def split_document(doc: TaggedDocument, rule: str = "tokens") -> SplitDocument:
    """Split a document in half at the most balanced sentence boundary.

    With ``rule="tokens"`` the boundary minimizes the absolute difference
    in token counts between the parts; with ``rule="sentences"`` it
    balances sentence counts instead. Ties go to the earlier boundary.
    Token and sentence indices are preserved, so concatenating the two
    parts reproduces the input token sequence exactly.
    """
    if rule not in ("tokens", "sentences"):
        raise ValueError(f"unknown split rule {rule!r}")
    sentences = doc.sentences()
    n_sent = len(sentences)
    if n_sent < 2:
        raise UnsplittableDocument(f"{doc.doc_id}: need at least 2 sentences to split")

    counts = [len(s) for s in sentences]
    total = sum(counts)
    best_boundary = 0
    best_cost: float | None = None
    running = 0
    for boundary in range(n_sent - 1):
        running += counts[boundary]
        if rule == "tokens":
            cost = abs(running - (total - running))
        else:
            cost = abs((boundary + 1) - (n_sent - boundary - 1))
        if best_cost is None or cost < best_cost:
            best_cost = cost
            best_boundary = boundary

    n_a = sum(counts[: best_boundary + 1])
    part_a = replace(doc, tokens=doc.tokens[:n_a])
    part_b = replace(doc, tokens=doc.tokens[n_a:])
    split_index = sentences[best_boundary][0].sentence_index
    return SplitDocument(part_a=part_a, part_b=part_b, split_sentence_index=split_index)
