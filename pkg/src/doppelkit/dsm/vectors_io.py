"""Word2vec text format: header line ``<vocab> <dim>``, then one word per line."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ..errors import ParseError


def read_word2vec_text(path: str | Path) -> dict[str, np.ndarray]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise ParseError("empty vectors file", line=1)
    header = lines[0].split()
    if len(header) != 2 or not all(p.isdigit() for p in header):
        raise ParseError(f"bad header {lines[0]!r}", line=1)
    n_words, dim = int(header[0]), int(header[1])
    table: dict[str, np.ndarray] = {}
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.rsplit(None, dim)
        if len(parts) != dim + 1:
            raise ParseError(f"expected {dim + 1} fields", line=line_no)
        try:
            table[parts[0]] = np.array([float(x) for x in parts[1:]], dtype=np.float64)
        except ValueError as exc:
            raise ParseError(str(exc), line=line_no) from None
    if len(table) != n_words:
        raise ParseError(f"header declared {n_words} words, found {len(table)}", line=1)
    return table


def write_word2vec_text(table: dict[str, np.ndarray], path: str | Path) -> None:
    words = sorted(table)
    dim = len(table[words[0]]) if words else 0
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{len(words)} {dim}\n")
        for w in words:
            values = " ".join(repr(float(x)) for x in table[w])
            fh.write(f"{w} {values}\n")
