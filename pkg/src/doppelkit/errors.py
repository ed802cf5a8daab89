"""Exception types raised across the toolkit.

Every error carries enough structure to be reported in a run without
string parsing; the CLI turns these into per-novel skip records instead
of aborting a whole dataset run.
"""

from __future__ import annotations


class DoppelkitError(Exception):
    """Base class for all toolkit errors."""


class EmptyDocument(DoppelkitError):
    """Input text contained no tokens."""


class ParseError(DoppelkitError):
    """A structured input file violated its format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsplittableDocument(DoppelkitError):
    """Document has fewer than two sentences and cannot be halved."""


class InvalidInventory(DoppelkitError):
    """A character inventory violated its invariants."""


class InsufficientNouns(DoppelkitError):
    """Fewer noun candidates than characters to match."""

    def __init__(self, needed: int, available: int):
        self.needed = needed
        self.available = available
        super().__init__(f"need {needed} noun candidates, only {available} available")


class RequiresTaggedInput(DoppelkitError):
    """Operation needs lemma/UPOS annotations but got a plain document."""


class EmptyVocabulary(DoppelkitError):
    """No context vocabulary could be built."""


class VocabularyTooSmall(DoppelkitError):
    """Vocabulary is too small to draw the requested negative samples."""


class MissingBackground(DoppelkitError):
    """Additive model invoked without a usable background table."""


class DimMismatch(DoppelkitError):
    """Imported vectors disagree on dimensionality."""

    def __init__(self, entity: str, expected: int, got: int):
        self.entity = entity
        self.expected = expected
        self.got = got
        super().__init__(f"entity {entity!r}: expected dim {expected}, got {got}")


class EmptySpace(DoppelkitError):
    """No vectors survived filtering."""


class TooFewEntities(DoppelkitError):
    """Candidate set is too small for the requested statistic."""


class ZeroVector(DoppelkitError):
    """A zero vector has no direction and cannot enter a cosine ranking."""

    def __init__(self, entity: str):
        self.entity = entity
        super().__init__(f"entity {entity!r} has a zero vector")


class UndefinedCorrelation(DoppelkitError):
    """Correlation of a constant sequence is undefined."""


class TooFewNovels(DoppelkitError):
    """Dataset-level correlation needs at least three joined novels."""


class EmptyRun(DoppelkitError):
    """No novel in the dataset could be processed."""


class ConfigError(DoppelkitError):
    """Run configuration is invalid."""
