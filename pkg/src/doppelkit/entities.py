"""Character inventories, alias substitution, and matched common nouns.

Characters are declared in a per-novel ``characters.json`` file; every
alias occurrence in a document is collapsed to a single canonical entity
token so that each character is one vocabulary item. Common nouns are
chosen from the document itself, one per character, by nearest whole
document frequency, and rewritten to canonical tokens the same way.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .corpus import TaggedDocument, Token, _TOKEN_RE
from .errors import InsufficientNouns, InvalidInventory

CATEGORY_CHARACTERS = "proper_names"
CATEGORY_NOUNS = "common_nouns"

_CHARACTER_ID_RE = re.compile(r"^__ent_[a-z0-9_]+__$")
_NOUN_ID_RE = re.compile(r"^__cn_[a-z0-9_]+__$")
_MAX_ALIAS_TOKENS = 5


def slugify(name: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")
    if not slug:
        raise InvalidInventory(f"cannot slugify {name!r}")
    return slug


def character_id(slug: str) -> str:
    return f"__ent_{slug}__"


def noun_id(slug: str) -> str:
    return f"__cn_{slug}__"


def is_entity_token(surface: str) -> bool:
    """True for canonical entity tokens of either category."""
    return bool(_CHARACTER_ID_RE.match(surface) or _NOUN_ID_RE.match(surface))


def _alias_tokens(alias: str) -> tuple[str, ...]:
    return tuple(m.group() for m in _TOKEN_RE.finditer(alias))


@dataclass(frozen=True)
class CharacterEntry:
    entity_id: str
    display_name: str
    aliases: tuple[str, ...]
    alias_token_seqs: tuple[tuple[str, ...], ...] = field(repr=False)

    @classmethod
    def create(cls, slug_or_id: str, display_name: str, aliases: list[str]) -> "CharacterEntry":
        eid = slug_or_id if _CHARACTER_ID_RE.match(slug_or_id) else character_id(slugify(slug_or_id))
        if not aliases:
            raise InvalidInventory(f"{eid}: alias list is empty")
        seqs = []
        for alias in aliases:
            seq = _alias_tokens(alias)
            if not 1 <= len(seq) <= _MAX_ALIAS_TOKENS:
                raise InvalidInventory(
                    f"{eid}: alias {alias!r} has {len(seq)} tokens, must be 1..{_MAX_ALIAS_TOKENS}"
                )
            seqs.append(seq)
        return cls(eid, display_name, tuple(aliases), tuple(seqs))


@dataclass(frozen=True)
class NounEntry:
    entity_id: str
    lemma: str
    matched_character_id: str


@dataclass(frozen=True)
class EntityInventory:
    novel_id: str
    characters: tuple[CharacterEntry, ...]
    common_nouns: tuple[NounEntry, ...]
    approximate: bool = False

    def character_ids(self) -> list[str]:
        return [c.entity_id for c in self.characters]

    def noun_ids(self) -> list[str]:
        return [n.entity_id for n in self.common_nouns]

    def category_of(self, entity_id: str) -> str:
        if _CHARACTER_ID_RE.match(entity_id):
            return CATEGORY_CHARACTERS
        if _NOUN_ID_RE.match(entity_id):
            return CATEGORY_NOUNS
        raise KeyError(entity_id)


@dataclass(frozen=True)
class MentionIndex:
    """Ordered, non-overlapping token spans per entity, half-open [start, stop).

    Spans always refer to the document the index was built from; every
    entity the indexer was asked about has a key, possibly with no spans.
    """

    doc_id: str
    spans: dict[str, tuple[tuple[int, int], ...]]

    def count(self, entity_id: str) -> int:
        return len(self.spans.get(entity_id, ()))


def validate_characters(characters: list[CharacterEntry]) -> None:
    seen_ids: set[str] = set()
    seen_aliases: dict[tuple[str, ...], str] = {}
    for ch in characters:
        if ch.entity_id in seen_ids:
            raise InvalidInventory(f"duplicate entity id {ch.entity_id}")
        seen_ids.add(ch.entity_id)
        for seq in ch.alias_token_seqs:
            owner = seen_aliases.get(seq)
            if owner is not None and owner != ch.entity_id:
                raise InvalidInventory(
                    f"alias {' '.join(seq)!r} claimed by both {owner} and {ch.entity_id}"
                )
            seen_aliases[seq] = ch.entity_id


def load_characters_json(path: str | Path) -> list[CharacterEntry]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    entries = []
    for item in data.get("characters", []):
        entries.append(CharacterEntry.create(item["id"], item.get("name", item["id"]), list(item["aliases"])))
    validate_characters(entries)
    return entries


def dump_characters_json(characters: list[CharacterEntry], path: str | Path) -> None:
    payload = {
        "characters": [
            {"id": c.entity_id[len("__ent_"):-len("__")], "name": c.display_name, "aliases": list(c.aliases)}
            for c in characters
        ]
    }
    Path(path).write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


def load_default_stopwords() -> frozenset[str]:
    text = resources.files("doppelkit").joinpath("data/stopwords_en.txt").read_text(encoding="utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip() and not w.startswith("#"))


def find_alias_spans(doc: TaggedDocument, characters: list[CharacterEntry]) -> dict[str, list[tuple[int, int]]]:
    """Locate alias occurrences: case-sensitive, left-to-right, longest alias first.

    A match must lie inside one sentence. Matched tokens are consumed, so
    spans never overlap.
    """
    validate_characters(characters)
    by_first: dict[str, list[tuple[tuple[str, ...], str]]] = {}
    for ch in characters:
        for seq in ch.alias_token_seqs:
            by_first.setdefault(seq[0], []).append((seq, ch.entity_id))
    for candidates in by_first.values():
        candidates.sort(key=lambda item: (-len(item[0]), item[0]))

    spans: dict[str, list[tuple[int, int]]] = {ch.entity_id: [] for ch in characters}
    tokens = doc.tokens
    n = len(tokens)
    i = 0
    while i < n:
        matched = False
        for seq, eid in by_first.get(tokens[i].surface, ()):
            j = i + len(seq)
            if j > n:
                continue
            if any(tokens[i + k].surface != seq[k] for k in range(1, len(seq))):
                continue
            if tokens[j - 1].sentence_index != tokens[i].sentence_index:
                continue
            spans[eid].append((i, j))
            i = j
            matched = True
            break
        if not matched:
            i += 1
    return spans


def _rewrite(doc: TaggedDocument, span_map: dict[str, list[tuple[int, int]]]) -> TaggedDocument:
    """Replace each span with one canonical entity token; lowercase the rest."""
    replacement_at: dict[int, tuple[int, str]] = {}
    for eid, spans in span_map.items():
        for start, stop in spans:
            replacement_at[start] = (stop, eid)

    new_tokens: list[Token] = []
    i = 0
    tokens = doc.tokens
    while i < len(tokens):
        if i in replacement_at:
            stop, eid = replacement_at[i]
            src = tokens[i]
            new_tokens.append(Token(eid, eid, "PROPN", src.sentence_index, len(new_tokens)))
            i = stop
        else:
            src = tokens[i]
            new_tokens.append(
                Token(src.surface.lower(), src.lemma, src.upos, src.sentence_index, len(new_tokens))
            )
            i += 1
    return TaggedDocument(doc.doc_id, doc.source_kind, tuple(new_tokens), tagged=doc.tagged)


def substitute_aliases(
    doc: TaggedDocument, characters: list[CharacterEntry]
) -> tuple[TaggedDocument, MentionIndex]:
    """Collapse alias occurrences to entity tokens and lowercase everything else.

    Returns the rewritten document plus a mention index whose spans refer
    to the original document. Zero matches for a character is legal.
    """
    spans = find_alias_spans(doc, characters)
    new_doc = _rewrite(doc, spans)
    index = MentionIndex(doc.doc_id, {eid: tuple(sp) for eid, sp in spans.items()})
    return new_doc, index


def count_mentions(index: MentionIndex) -> dict[str, int]:
    """Span count per entity; entities indexed with zero spans count 0."""
    return {eid: len(spans) for eid, spans in index.spans.items()}


def _alias_word_set(characters: list[CharacterEntry]) -> set[str]:
    words: set[str] = set()
    for ch in characters:
        for seq in ch.alias_token_seqs:
            words.update(w.lower() for w in seq)
    return words


def _noun_candidates(
    doc: TaggedDocument, characters: list[CharacterEntry], stoplist: frozenset[str] | None
) -> Counter:
    blocked = _alias_word_set(characters)
    counts: Counter = Counter()
    if doc.tagged:
        for tok in doc.tokens:
            if tok.upos == "NOUN" and tok.lemma:
                lemma = tok.lemma.lower()
                if lemma not in blocked:
                    counts[lemma] += 1
    else:
        if stoplist is None:
            raise InvalidInventory("untagged document needs a stoplist for noun selection")
        for tok in doc.tokens:
            s = tok.surface
            if s.isalpha() and s == s.lower() and s not in stoplist and s not in blocked:
                counts[s] += 1
    return counts


def select_matched_nouns(
    doc: TaggedDocument,
    characters: list[CharacterEntry],
    stoplist: frozenset[str] | None = None,
    mention_counts: dict[str, int] | None = None,
    novel_id: str | None = None,
) -> EntityInventory:
    """Pick one common noun per character by nearest whole-document frequency.

    Characters are processed in descending mention count; each takes the
    unused candidate noun whose document frequency is closest to the
    character's mention count, ties broken alphabetically. On a tagged
    document candidates are NOUN lemmas; otherwise lowercase alphabetic
    non-stoplist surfaces (flagged as approximate). Words that appear in
    any character alias are never candidates.
    """
    validate_characters(characters)
    if mention_counts is None:
        spans = find_alias_spans(doc, characters)
        mention_counts = {eid: len(sp) for eid, sp in spans.items()}
    candidates = _noun_candidates(doc, characters, stoplist)
    if len(candidates) < len(characters):
        raise InsufficientNouns(len(characters), len(candidates))

    order = sorted(characters, key=lambda ch: (-mention_counts.get(ch.entity_id, 0), ch.entity_id))
    available = dict(candidates)
    used_ids = {ch.entity_id for ch in characters}
    matches: list[NounEntry] = []
    for ch in order:
        target = mention_counts.get(ch.entity_id, 0)
        best = min(available.items(), key=lambda kv: (abs(kv[1] - target), kv[0]))
        lemma = best[0]
        del available[lemma]
        nid = noun_id(slugify(lemma))
        while nid in used_ids:
            nid = noun_id(slugify(lemma) + "_")
        used_ids.add(nid)
        matches.append(NounEntry(nid, lemma, ch.entity_id))

    return EntityInventory(
        novel_id=novel_id or doc.doc_id,
        characters=tuple(sorted(characters, key=lambda ch: ch.entity_id)),
        common_nouns=tuple(sorted(matches, key=lambda m: m.entity_id)),
        approximate=not doc.tagged,
    )


def index_common_nouns(doc: TaggedDocument, inventory: EntityInventory) -> MentionIndex:
    """Single-token spans where the lemma (tagged) or lowercased surface matches."""
    by_key: dict[str, str] = {n.lemma: n.entity_id for n in inventory.common_nouns}
    spans: dict[str, list[tuple[int, int]]] = {n.entity_id: [] for n in inventory.common_nouns}
    for i, tok in enumerate(doc.tokens):
        key = tok.lemma.lower() if doc.tagged and tok.lemma else tok.surface.lower()
        eid = by_key.get(key)
        if eid is not None:
            spans[eid].append((i, i + 1))
    return MentionIndex(doc.doc_id, {eid: tuple(sp) for eid, sp in spans.items()})


def build_model_document(
    doc: TaggedDocument,
    inventory: EntityInventory,
) -> tuple[TaggedDocument, MentionIndex, MentionIndex]:
    """Rewrite both categories to canonical tokens in one pass.

    Noun occurrences inside a character mention are consumed by the
    character. Returns the model-ready document plus the two mention
    indexes in original-document coordinates.
    """
    alias_spans = find_alias_spans(doc, list(inventory.characters))
    noun_index = index_common_nouns(doc, inventory)

    taken = [False] * (len(doc.tokens) + 1)
    for spans in alias_spans.values():
        for start, stop in spans:
            for k in range(start, stop):
                taken[k] = True
    noun_spans: dict[str, list[tuple[int, int]]] = {}
    for eid, spans in noun_index.spans.items():
        noun_spans[eid] = [sp for sp in spans if not taken[sp[0]]]

    combined = {eid: list(sp) for eid, sp in alias_spans.items()}
    combined.update(noun_spans)
    model_doc = _rewrite(doc, combined)
    char_index = MentionIndex(doc.doc_id, {eid: tuple(sp) for eid, sp in alias_spans.items()})
    noun_index = MentionIndex(doc.doc_id, {eid: tuple(sp) for eid, sp in noun_spans.items()})
    return model_doc, char_index, noun_index


def bootstrap_characters(
    doc: TaggedDocument, max_characters: int = 15, min_count: int = 5
) -> list[CharacterEntry]:
    """Draft a character inventory from capitalization patterns.

    A name candidate is a capitalized alphabetic token seen at least
    ``min_count`` times away from sentence starts. Frequent adjacent
    pairs become two-token aliases. The output is a draft for human
    curation, not a resolved inventory.
    """
    stop = load_default_stopwords()
    unigrams: Counter = Counter()
    sentence_start = {s[0].token_index for s in doc.sentences()}
    for tok in doc.tokens:
        s = tok.surface
        if tok.token_index in sentence_start:
            continue
        if s[:1].isupper() and s.isalpha() and s.lower() not in stop:
            unigrams[s] += 1
    names = {w for w, c in unigrams.items() if c >= min_count}

    bigrams: Counter = Counter()
    toks = doc.tokens
    for i in range(len(toks) - 1):
        a, b = toks[i].surface, toks[i + 1].surface
        if a in names and b in names and toks[i].sentence_index == toks[i + 1].sentence_index:
            bigrams[(a, b)] += 1

    used: set[str] = set()
    drafts: list[tuple[int, str, list[str]]] = []
    for (a, b), c in bigrams.most_common():
        if c < min_count or a in used or b in used:
            continue
        drafts.append((unigrams[a] + c, f"{a} {b}", [f"{a} {b}", a]))
        used.update((a, b))
    for w, c in unigrams.most_common():
        if w in names and w not in used:
            drafts.append((c, w, [w]))
            used.add(w)

    drafts.sort(key=lambda d: (-d[0], d[1]))
    entries = []
    for _, name, aliases in drafts[:max_characters]:
        entries.append(CharacterEntry.create(slugify(name), name, aliases))
    validate_characters(entries)
    return entries
