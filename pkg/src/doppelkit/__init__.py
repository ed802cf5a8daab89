"""doppelkit: split-half reference matching for characters and common nouns.

Builds per-entity distributional representations from two halves of a
document and measures how reliably co-referring representations can be
matched across the halves, with POS neighbourhood, correlational, and
representational-similarity follow-ups.
"""

__version__ = "0.1.0"

from . import errors
from .corpus import (
    SplitDocument,
    TaggedDocument,
    Token,
    load_document,
    parse_conllu,
    split_document,
    tokenize_plain,
)
from .entities import (
    CharacterEntry,
    EntityInventory,
    MentionIndex,
    NounEntry,
    bootstrap_characters,
    build_model_document,
    count_mentions,
    index_common_nouns,
    load_characters_json,
    select_matched_nouns,
    substitute_aliases,
)

from . import analyses, dsm
from .doppel import (
    BaselineEstimate,
    DoppelResult,
    chance_baseline,
    doppelganger_score,
    quality_score,
)

__all__ = [
    "errors",
    "analyses",
    "dsm",
    "DoppelResult",
    "BaselineEstimate",
    "chance_baseline",
    "doppelganger_score",
    "quality_score",
    "Token",
    "TaggedDocument",
    "SplitDocument",
    "tokenize_plain",
    "parse_conllu",
    "load_document",
    "split_document",
    "CharacterEntry",
    "NounEntry",
    "EntityInventory",
    "MentionIndex",
    "substitute_aliases",
    "count_mentions",
    "select_matched_nouns",
    "index_common_nouns",
    "build_model_document",
    "bootstrap_characters",
    "__version__",
]
