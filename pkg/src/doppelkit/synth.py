"""Synthetic tagged novels with planted characters and common nouns.

The generator writes small template-based narratives where each
character has a signature vocabulary drawn from shared pools, so
characters are distinguishable but confusable, and common nouns recur
with stable contexts. Templates carry gold lemma/UPOS annotations, so
each novel is emitted both as plain text and as CoNLL-U.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

FIRST_NAMES = [
    "Alma", "Bram", "Cora", "Dane", "Edda", "Finn", "Greta", "Hugo",
    "Ines", "Jorik", "Katya", "Lars", "Mira", "Nils", "Odile", "Piet",
    "Quin", "Rosa", "Sven", "Tessa", "Ulf", "Vera", "Wim", "Xenia",
    "Yann", "Zelda", "Arvid", "Brita", "Cas", "Doria", "Eino", "Freja",
    "Gorm", "Hedda", "Ivo", "Jutta", "Kjell", "Lovis", "Maren", "Njord",
    "Oda", "Pelle", "Runa", "Sigrid", "Truls", "Unn", "Viggo", "Ylva",
    "Asta", "Birk", "Cilla", "Dag", "Embla", "Folke", "Gunnar", "Halla",
]

SURNAMES = [
    "Holt", "Marsh", "Fenn", "Drake", "Wolfe", "Stern", "Lund", "Berg",
    "Falk", "Storm", "Vik", "Nash", "Thorn", "Ridge", "Crane", "Frost",
    "Ash", "Birch", "Dale", "Moor", "Reed", "Stone", "Tarn", "Vale",
    "West", "York", "Bluff", "Cliff",
]

NOUNS = [
    "lamp", "boat", "net", "letter", "garden", "clock", "bridge", "cellar",
    "harbor", "kettle", "ladder", "market", "orchard", "pantry", "quarry",
    "ribbon", "saddle", "tavern", "anvil", "barrel", "candle", "drum",
    "engine", "fiddle", "gate", "hammer", "inkwell", "jacket", "knife",
    "loom", "mill", "needle", "oven", "plough", "quilt", "rope", "shovel",
    "trunk", "umbrella", "violin", "wagon", "yard", "basket", "chimney",
    "desk", "fence", "granary", "hearth", "island", "jetty", "keel",
    "lantern", "mast", "notebook", "organ", "pier", "railing", "stable",
    "tower", "well",
]

VERBS = [
    ("carried", "carry"), ("mended", "mend"), ("watched", "watch"),
    ("opened", "open"), ("closed", "close"), ("painted", "paint"),
    ("cleaned", "clean"), ("counted", "count"), ("built", "build"),
    ("burned", "burn"), ("dragged", "drag"), ("filled", "fill"),
    ("guarded", "guard"), ("hauled", "haul"), ("lifted", "lift"),
    ("locked", "lock"), ("measured", "measure"), ("oiled", "oil"),
    ("packed", "pack"), ("patched", "patch"), ("polished", "polish"),
    ("pushed", "push"), ("raised", "raise"), ("repaired", "repair"),
    ("sailed", "sail"), ("sharpened", "sharpen"), ("sketched", "sketch"),
    ("stacked", "stack"), ("swept", "sweep"), ("tarred", "tar"),
    ("tended", "tend"), ("tested", "test"), ("tied", "tie"),
    ("trimmed", "trim"), ("turned", "turn"), ("washed", "wash"),
    ("weighed", "weigh"), ("wound", "wind"),
]

ADJECTIVES = [
    "old", "small", "heavy", "bright", "quiet", "narrow", "broken",
    "crooked", "damp", "empty", "faded", "grey", "hollow", "iron",
    "long", "muddy", "pale", "rusty", "steep", "warm", "wooden", "worn",
]

ADVERBS = [
    "slowly", "carefully", "quietly", "again", "early", "often",
    "barely", "gently", "late", "twice", "soon", "alone",
]


@dataclass(frozen=True)
class SynthToken:
    surface: str
    lemma: str
    upos: str


def _word(surface, lemma, upos):
    return SynthToken(surface, lemma, upos)


_THE = _word("the", "the", "DET")
_A = _word("a", "a", "DET")
_DOT = _word(".", ".", "PUNCT")
_AND = _word("and", "and", "CCONJ")
_NEAR = _word("near", "near", "ADP")
_WAS = _word("was", "be", "AUX")
_HE = _word("he", "he", "PRON")
_SHE = _word("she", "she", "PRON")
_IN = _word("in", "in", "ADP")


@dataclass
class SynthNovel:
    novel_id: str
    sentences: list[list[SynthToken]]
    characters: list[dict]

    def text(self) -> str:
        rendered = []
        for sent in self.sentences:
            words = []
            for i, tok in enumerate(sent):
                surface = tok.surface
                if i == 0 and surface[0].isalpha():
                    surface = surface[0].upper() + surface[1:]
                words.append(surface)
            body = " ".join(words[:-1]) if len(words) > 1 else ""
            rendered.append((body + words[-1]) if words[-1] == "." else " ".join(words))
        return " ".join(rendered) + "\n"

    def conllu(self) -> str:
        blocks = []
        for sent in self.sentences:
            lines = []
            for i, tok in enumerate(sent):
                surface = tok.surface
                if i == 0 and surface[0].isalpha():
                    surface = surface[0].upper() + surface[1:]
                head = "0" if i == 0 else "1"
                deprel = "root" if i == 0 else "dep"
                lines.append(
                    f"{i + 1}\t{surface}\t{tok.lemma}\t{tok.upos}\t_\t_\t{head}\t{deprel}\t_\t_"
                )
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"


@dataclass
class _Profile:
    name_tokens: list[SynthToken]
    short_name: SynthToken
    pronoun: SynthToken
    nouns: list[str]
    verbs: list[tuple[str, str]]
    adjectives: list[str]


def _character_profiles(rng, n_characters, two_token_fraction=0.4):
    if n_characters > len(FIRST_NAMES):
        raise ValueError(f"at most {len(FIRST_NAMES)} characters supported")
    first = rng.permutation(len(FIRST_NAMES))[:n_characters]
    surn = rng.permutation(len(SURNAMES))
    profiles = []
    records = []
    for i, idx in enumerate(first):
        name = FIRST_NAMES[idx]
        short = _word(name, name, "PROPN")
        if i < int(two_token_fraction * n_characters) and i < len(SURNAMES):
            surname = SURNAMES[surn[i]]
            name_tokens = [short, _word(surname, surname, "PROPN")]
            aliases = [f"{name} {surname}", name]
            display = f"{name} {surname}"
        else:
            name_tokens = [short]
            aliases = [name]
            display = name
        profiles.append(
            _Profile(
                name_tokens=name_tokens,
                short_name=short,
                pronoun=_HE if i % 2 else _SHE,
                nouns=[NOUNS[j] for j in rng.choice(len(NOUNS), size=3, replace=False)],
                verbs=[VERBS[j] for j in rng.choice(len(VERBS), size=3, replace=False)],
                adjectives=[ADJECTIVES[j] for j in rng.choice(len(ADJECTIVES), size=2, replace=False)],
            )
        )
        records.append({"id": name.lower(), "name": display, "aliases": aliases})
    return profiles, records


def _noun(rng, profile=None, p_signature=0.65):
    if profile is not None and rng.random() < p_signature:
        return profile.nouns[int(rng.integers(len(profile.nouns)))]
    return NOUNS[int(rng.integers(len(NOUNS)))]


def _verb(rng, profile=None, p_signature=0.65):
    if profile is not None and rng.random() < p_signature:
        surface, lemma = profile.verbs[int(rng.integers(len(profile.verbs)))]
    else:
        surface, lemma = VERBS[int(rng.integers(len(VERBS)))]
    return _word(surface, lemma, "VERB")


def _adj(rng, profile=None, p_signature=0.5):
    if profile is not None and rng.random() < p_signature:
        return profile.adjectives[int(rng.integers(len(profile.adjectives)))]
    return ADJECTIVES[int(rng.integers(len(ADJECTIVES)))]


def _adv(rng):
    return _word(*([ADVERBS[int(rng.integers(len(ADVERBS)))]] * 2), upos="ADV")


def _noun_tok(lemma):
    return _word(lemma, lemma, "NOUN")


def _adj_tok(lemma):
    return _word(lemma, lemma, "ADJ")


def _character_sentence(rng, profile, other):
    mention = list(profile.name_tokens if rng.random() < 0.5 else [profile.short_name])
    kind = rng.random()
    if kind < 0.30:
        return mention + [_verb(rng, profile), _THE, _noun_tok(_noun(rng, profile)), _DOT]
    if kind < 0.50:
        return mention + [
            _verb(rng, profile), _THE, _adj_tok(_adj(rng, profile)),
            _noun_tok(_noun(rng, profile)), _DOT,
        ]
    if kind < 0.64 and other is not None:
        return (
            mention + [_AND] + [other.short_name]
            + [_verb(rng, None), _NEAR, _THE, _noun_tok(_noun(rng, None)), _DOT]
        )
    if kind < 0.80:
        return mention + [_verb(rng, profile), _adv(rng), _DOT]
    if kind < 0.90:
        return (
            mention + [_verb(rng, profile), _THE, _noun_tok(_noun(rng, profile)),
                       _IN, _THE, _noun_tok(_noun(rng, None)), _DOT]
        )
    return [profile.pronoun, _verb(rng, profile), _THE, _noun_tok(_noun(rng, profile)),
            _adv(rng), _DOT]


def _noun_sentence(rng):
    kind = rng.random()
    noun = _noun_tok(_noun(rng, None))
    if kind < 0.4:
        return [_THE, noun, _WAS, _adj_tok(_adj(rng, None)), _DOT]
    if kind < 0.7:
        return [_THE, _adj_tok(_adj(rng, None)), noun, _WAS, _adj_tok(_adj(rng, None)), _DOT]
    return [_THE, noun, _verb(rng, None), _adv(rng), _DOT]


def generate_novel(
    novel_id: str,
    n_characters: int,
    target_tokens: int,
    seed: int,
    p_character_sentence: float = 0.62,
) -> SynthNovel:
    rng = np.random.default_rng(seed)
    profiles, records = _character_profiles(rng, n_characters)
    ranks = np.arange(1, n_characters + 1, dtype=np.float64)
    weights = (1.0 / ranks) / np.sum(1.0 / ranks)

    sentences: list[list[SynthToken]] = []
    total = 0
    while total < target_tokens:
        if rng.random() < p_character_sentence:
            i = int(rng.choice(n_characters, p=weights))
            other = None
            if n_characters > 1:
                j = int(rng.integers(n_characters - 1))
                other = profiles[j if j < i else j + 1]
            sent = _character_sentence(rng, profiles[i], other)
        else:
            sent = _noun_sentence(rng)
        sentences.append(sent)
        total += len(sent)
    return SynthNovel(novel_id=novel_id, sentences=sentences, characters=records)


def generate_wiki(novel: SynthNovel, seed: int) -> str:
    """Short untagged summary mentioning every character at least twice."""
    rng = np.random.default_rng(seed)
    lines = []
    for record in novel.characters:
        name = record["aliases"][0]
        short = record["aliases"][-1]
        noun_a = NOUNS[int(rng.integers(len(NOUNS)))]
        noun_b = NOUNS[int(rng.integers(len(NOUNS)))]
        verb_a = VERBS[int(rng.integers(len(VERBS)))][0]
        verb_b = VERBS[int(rng.integers(len(VERBS)))][0]
        lines.append(f"{name} {verb_a} the {noun_a}.")
        lines.append(f"Later {short} {verb_b} the {noun_b} again.")
    rng.shuffle(lines)
    return " ".join(lines) + "\n"


def write_dataset(
    out_dir: str | Path,
    n_novels: int = 2,
    n_characters: int = 8,
    target_tokens: int = 6000,
    seed: int = 1,
    with_wiki: bool = False,
    with_conllu: bool = True,
    character_counts: list[int] | None = None,
) -> list[str]:
    """Write a synthetic dataset; returns the novel ids created.

    ``character_counts`` overrides ``n_characters``/``n_novels`` for
    sweep datasets: one novel per listed count, in order.
    """
    out_dir = Path(out_dir)
    if character_counts is None:
        plan = [(f"synth{i:02d}", n_characters) for i in range(n_novels)]
    else:
        plan = [
            (f"synth_c{count:03d}_{i:02d}", count)
            for i, count in enumerate(character_counts)
        ]
    ids = []
    for i, (novel_id, count) in enumerate(plan):
        novel = generate_novel(novel_id, count, target_tokens, seed + 1000 * i)
        novel_dir = out_dir / novel_id
        novel_dir.mkdir(parents=True, exist_ok=True)
        (novel_dir / "novel.txt").write_text(novel.text(), encoding="utf-8")
        if with_conllu:
            (novel_dir / "novel.conllu").write_text(novel.conllu(), encoding="utf-8")
        (novel_dir / "characters.json").write_text(
            json.dumps({"characters": novel.characters}, indent=2) + "\n", encoding="utf-8"
        )
        if with_wiki:
            (novel_dir / "wiki.txt").write_text(
                generate_wiki(novel, seed + 1000 * i + 7), encoding="utf-8"
            )
        ids.append(novel_id)
    return ids
