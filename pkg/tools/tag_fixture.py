#!/usr/bin/env python3
"""Fixture-prep tagger for the bundled desk corpus.

Turns the hand-written novellas (one sentence per line) into CoNLL-U
with UD-style UPOS tags and lemmas, using the closed lexicon in
lexicon_data.py plus context rules for the genuinely ambiguous forms.
Not part of the installed package. Usage, from the repository root:

    python3 tools/tag_fixture.py tools/desk_src/<novel>.txt --out <out>.conllu
    python3 tools/tag_fixture.py tools/desk_src/<novel>.txt --check
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
import lexicon_data  # noqa: E402

TOKEN_RE = re.compile(r"[A-Za-z]+|[0-9]+|[^\sA-Za-z0-9]")
BANNED_CHARS = "'’\"“”;:()"
BANNED_WORDS = {"that", "That"}
MODALS = {"would", "could", "should", "might", "must", "will",
          "shall", "may", "can", "cannot"}
NOMINAL_LEFT = {"DET", "ADJ", "NUM"}
POSSESSIVES = {"her", "his", "my", "your", "their", "its", "our"}


def plural_of(singular: str) -> str:
    if singular.endswith(("s", "x", "z", "ch", "sh")):
        return singular + "es"
    if singular.endswith("y") and singular[-2] not in "aeiou":
        return singular[:-1] + "ies"
    return singular + "s"


def build_lexicon() -> dict[str, list[tuple[str, str]]]:
    lex: dict[str, list[tuple[str, str]]] = {}

    def add(form, lemma, upos):
        entry = (lemma, upos)
        lex.setdefault(form, [])
        if entry not in lex[form]:
            lex[form].append(entry)

    for form, (lemma, upos) in lexicon_data.CLOSED.items():
        add(form, lemma, upos)
    for form, entries in lexicon_data.AMBIGUOUS.items():
        for lemma, upos in entries:
            add(form, lemma, upos)

    for spec in lexicon_data.NOUNS.split():
        if ":" in spec:
            singular, plural = spec.split(":")
        else:
            singular, plural = spec, plural_of(spec)
        add(singular, singular, "NOUN")
        add(plural, singular, "NOUN")

    for line in lexicon_data.VERBS.strip().splitlines():
        parts = line.split()
        if not parts:
            continue
        base = parts[0]
        past = parts[1] if len(parts) > 1 else base + "ed"
        participle = parts[2] if len(parts) > 2 else past
        add(past, base, "VERB")
        add(participle, base, "VERB")
        add(base, base, "VERB")

    for word in lexicon_data.strip_multiword(lexicon_data.ADJECTIVES.split()):
        add(word, word, "ADJ")
    for word in lexicon_data.strip_multiword(lexicon_data.ADVERBS.split()):
        add(word, word, "ADV")
    for word in lexicon_data.PROPER.split():
        lex[word] = [(word, "PROPN")]
    return lex


def tokenize(line: str) -> list[str]:
    return TOKEN_RE.findall(line)


def lookup(lex, form: str, sentence_initial: bool):
    if form in lex:
        return lex[form]
    if sentence_initial and form[:1].isupper():
        lowered = form[0].lower() + form[1:]
        if lowered in lex:
            return lex[lowered]
    return []


def tag_sentence(lex, tokens, problems, line_no):
    entries_per_token = []
    for i, form in enumerate(tokens):
        if form[0].isdigit():
            entries_per_token.append([(form, "NUM")])
        elif not form[0].isalpha():
            entries_per_token.append([(form, "PUNCT")])
        else:
            entries = lookup(lex, form, sentence_initial=(i == 0))
            if not entries:
                problems.append(f"line {line_no}: unknown form {form!r}")
                entries = [(form.lower(), "X")]
            entries_per_token.append(entries)

    out: list[tuple[str, str, str]] = []
    for i, form in enumerate(tokens):
        entries = entries_per_token[i]
        lemma, upos = entries[0]
        prev = out[-1] if out else None
        upcoming = entries_per_token[i + 1] if i + 1 < len(tokens) else []

        if len({u for _, u in entries}) > 1:
            verb = next(((l, u) for l, u in entries if u == "VERB"), None)
            nominal = next(((l, u) for l, u in entries if u in ("NOUN", "ADJ")), None)
            adposition = next(((l, u) for l, u in entries if u == "ADP"), None)

            if form == "to":
                lemma, upos = ("to", "PART") if any(u == "VERB" for _, u in upcoming) \
                    else ("to", "ADP")
            elif form == "there":
                lemma, upos = ("there", "PRON") if any(u == "AUX" for _, u in upcoming) \
                    else ("there", "ADV")
            elif entries[0][0] in ("have", "do"):
                # auxiliary when the verb group continues after optional adverbs
                upos = "VERB"
                lemma = entries[0][0]
                for later in entries_per_token[i + 1:]:
                    tags = {u for _, u in later}
                    if tags & {"ADV", "PART"} and not tags & {"VERB", "AUX"}:
                        continue
                    if tags & {"VERB", "AUX"}:
                        upos = "AUX"
                    break
            elif entries[0][0] in ("before", "after", "until", "since"):
                # a finite verb before the next punctuation signals a clause
                follows_clause = False
                for later in entries_per_token[i + 1: i + 6]:
                    tags = {u for _, u in later}
                    if "PUNCT" in tags or "SCONJ" in tags or "CCONJ" in tags:
                        break
                    if tags & {"VERB", "AUX"}:
                        follows_clause = True
                        break
                lemma, upos = (entries[0][0], "SCONJ") if follows_clause \
                    else (entries[0][0], "ADP")
            elif adposition and upcoming and any(
                u in ("DET", "PRON", "PROPN", "NOUN", "NUM") for _, u in upcoming
            ) and entries[0][1] != "ADJ":
                lemma, upos = adposition
            elif verb and nominal:
                if prev and (
                    prev[2] in NOMINAL_LEFT
                    or (prev[2] == "PRON" and prev[1] in POSSESSIVES)
                    or (prev[2] == "ADP")
                ):
                    lemma, upos = nominal
                elif prev and (
                    prev[1] in MODALS
                    or (prev[1] == "to" and prev[2] == "PART")
                    or prev[1] == "not"
                    or (prev[2] in ("AUX", "PROPN"))
                    or (prev[2] == "PRON" and prev[1] not in POSSESSIVES)
                ):
                    lemma, upos = verb
            elif nominal and prev and (
                prev[2] in NOMINAL_LEFT
                or (prev[2] == "PRON" and prev[1] in POSSESSIVES)
            ):
                lemma, upos = nominal

        out.append((form, lemma, upos))
    return out


def to_conllu(tagged_sentences) -> str:
    blocks = []
    for sent in tagged_sentences:
        lines = []
        for i, (form, lemma, upos) in enumerate(sent, start=1):
            head = "0" if i == 1 else "1"
            deprel = "root" if i == 1 else "dep"
            lines.append(f"{i}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{deprel}\t_\t_")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("source", type=Path)
    parser.add_argument("--check", action="store_true")
    parser.add_argument("--out", type=Path, default=None)
    parser.add_argument("--dump-ambiguous", action="store_true",
                        help="Print every resolved ambiguous form for review.")
    args = parser.parse_args()

    lex = build_lexicon()
    problems: list[str] = []
    tagged = []
    ambiguous_log = []
    for line_no, raw in enumerate(args.source.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        for ch in BANNED_CHARS:
            if ch in line:
                problems.append(f"line {line_no}: banned character {ch!r}")
        tokens = tokenize(line)
        for t in tokens:
            if t in BANNED_WORDS:
                problems.append(f"line {line_no}: banned word {t!r}")
        sent = tag_sentence(lex, tokens, problems, line_no)
        tagged.append(sent)
        if args.dump_ambiguous:
            for j, (form, lemma, upos) in enumerate(sent):
                key = form if form in lex else form.lower()
                if key in lex and len({u for _, u in lex[key]}) > 1:
                    ctx = " ".join(tokens[max(0, j - 2): j + 3])
                    ambiguous_log.append(f"{line_no}: {form} -> {upos} | {ctx}")

    for entry in ambiguous_log:
        print(entry, file=sys.stderr)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        print(f"{len(problems)} problems", file=sys.stderr)
        sys.exit(1)
    if args.check:
        n_tokens = sum(len(s) for s in tagged)
        print(f"{args.source}: OK ({len(tagged)} sentences, {n_tokens} tokens)")
        return
    text = to_conllu(tagged)
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
