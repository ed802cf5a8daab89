"""Import of per-mention contextual vectors from the interchange file.

The interchange format is UTF-8 JSON Lines, one record per mention:

    {"novel": "<id>", "part": "A|B|novel|wiki", "entity": "<entity_id>",
     "mention": <int>, "dim": <int>, "values": [<numbers>]}

Records for one (novel, part, entity) need not be contiguous. An entity
vector is the arithmetic mean of its mention vectors, L2-normalized.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from ..errors import DimMismatch, EmptySpace, ParseError
from .space import PART_IDS, EmbeddingSpace

_REQUIRED_KEYS = ("novel", "part", "entity", "mention", "dim", "values")

AGGREGATIONS = ("mean_l2",)


def parse_interchange_line(line: str, line_no: int) -> dict:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", line=line_no) from None
    if not isinstance(record, dict):
        raise ParseError("record is not an object", line=line_no)
    for key in _REQUIRED_KEYS:
        if key not in record:
            raise ParseError(f"missing key {key!r}", line=line_no)
    if record["part"] not in PART_IDS:
        raise ParseError(f"bad part {record['part']!r}", line=line_no)
    if not isinstance(record["dim"], int) or record["dim"] < 1:
        raise ParseError("dim must be a positive integer", line=line_no)
    values = record["values"]
    if not isinstance(values, list) or len(values) != record["dim"]:
        raise ParseError("values length does not match dim", line=line_no)
    floats = []
    for x in values:
        if not isinstance(x, (int, float)) or isinstance(x, bool) or not math.isfinite(x):
            raise ParseError("values must be finite numbers", line=line_no)
        floats.append(float(x))
    record["values"] = floats
    return record


def iter_interchange(path: str | Path):
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                raise ParseError("blank line", line=line_no)
            yield parse_interchange_line(line, line_no)


def import_contextual_space(
    path: str | Path,
    part_filter: str,
    aggregation: str = "mean_l2",
    model_id: str = "contextual",
    novel_filter: str | None = None,
) -> EmbeddingSpace:
    """Mean-then-normalize mention vectors into one entity space."""
    if aggregation not in AGGREGATIONS:
        raise ValueError(f"unknown aggregation {aggregation!r}")
    if part_filter not in PART_IDS:
        raise ValueError(f"unknown part {part_filter!r}")

    by_entity: dict[str, list[np.ndarray]] = {}
    dims: dict[str, int] = {}
    for record in iter_interchange(path):
        if record["part"] != part_filter:
            continue
        if novel_filter is not None and record["novel"] != novel_filter:
            continue
        entity = record["entity"]
        expected = dims.get(entity)
        if expected is not None and record["dim"] != expected:
            raise DimMismatch(entity, expected, record["dim"])
        dims[entity] = record["dim"]
        by_entity.setdefault(entity, []).append(np.array(record["values"], dtype=np.float64))

    if not by_entity:
        raise EmptySpace(f"{path}: no records for part {part_filter!r}")
    space_dim = None
    for entity in sorted(dims):
        if space_dim is None:
            space_dim = dims[entity]
        elif dims[entity] != space_dim:
            raise DimMismatch(entity, space_dim, dims[entity])

    vectors = {}
    excluded = {}
    for entity, mentions in by_entity.items():
        mean = np.mean(mentions, axis=0)
        norm = np.linalg.norm(mean)
        if norm == 0.0:
            excluded[entity] = "zero_vector"
        else:
            vectors[entity] = mean / norm

    return EmbeddingSpace(
        part_id=part_filter,
        model_id=model_id,
        dim=int(space_dim),
        vectors=vectors,
        sparse=False,
        excluded=excluded,
    )


def write_interchange(records, path: str | Path) -> None:
    """Write records as interchange JSON Lines; keys in canonical order."""
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            ordered = {key: record[key] for key in _REQUIRED_KEYS}
            fh.write(json.dumps(ordered, ensure_ascii=False) + "\n")
