#!/usr/bin/env python3
"""Generate the bundled frequency-ranked dictionary from the curated vocabulary.

Inflected forms are expanded from the base entries in vocab.py; counts are
synthetic Zipf-like values derived from each word's frequency tier with a
deterministic per-word jitter so that ranking is stable and mostly unique.

Usage: python tools/make_dictionary.py [output_path]
"""

import hashlib
import sys
from pathlib import Path

from vocab import (
    ADJS, EXTRA_NOUNS, EXTRA_WORDS, FUNCTION_WORDS, NO_PLURAL, NOUNS, VERBS,
)

TIER_COUNTS = [
    8_000_000, 2_500_000, 800_000, 250_000, 80_000,
    25_000, 8_000, 2_500, 800, 250,
]

VOWELS = set("aeiou")


def jittered_count(word: str, tier: int) -> int:
    tier = min(max(tier, 0), len(TIER_COUNTS) - 1)
    digest = hashlib.sha256(word.encode()).digest()
    jitter = 0.75 + 0.5 * (int.from_bytes(digest[:4], "big") / 2**32)
    return max(2, int(TIER_COUNTS[tier] * jitter))


def plural_of(word: str, rule: str) -> str | None:
    if rule == "-":
        return None
    if rule == "s":
        if word.endswith(("s", "x", "z", "ch", "sh")):
            return word + "es"
        if word.endswith("y") and len(word) > 1 and word[-2] not in VOWELS:
            return word[:-1] + "ies"
        return word + "s"
    if rule == "es":
        return word + "es"
    return rule  # explicit irregular plural


def regular_verb_forms(base: str, double: bool) -> tuple[str, str, str]:
    """Return (past, ing, third_singular) for a regular verb."""
    if double:
        past = base + base[-1] + "ed"
        ing = base + base[-1] + "ing"
    elif base.endswith("ee"):
        past = base + "d"
        ing = base + "ing"
    elif base.endswith("e"):
        past = base + "d"
        ing = base[:-1] + "ing"
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        past = base[:-1] + "ied"
        ing = base + "ing"
    else:
        past = base + "ed"
        ing = base + "ing"
    if base.endswith(("s", "x", "z", "ch", "sh")):
        third = base + "es"
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        third = base[:-1] + "ies"
    else:
        third = base + "s"
    return past, ing, third


def adverb_of(word: str, rule: str) -> str | None:
    if rule == "-":
        return None
    if rule != "l":
        return rule  # explicit form
    if word.endswith("ic"):
        return word + "ally"
    if word.endswith("le") and len(word) > 2 and word[-3] not in VOWELS:
        return word[:-1] + "y"
    if word.endswith("y") and len(word) > 1 and word[-2] not in VOWELS:
        return word[:-1] + "ily"
    if word.endswith("ll"):
        return word + "y"
    return word + "ly"


def build_entries() -> dict[str, int]:
    entries: dict[str, int] = {}

    def add(word: str, tier: int) -> None:
        word = word.lower()
        if not word.isalpha():
            raise ValueError(f"non-alphabetic entry: {word!r}")
        count = jittered_count(word, tier)
        entries[word] = max(entries.get(word, 0), count)

    for word, tier in FUNCTION_WORDS:
        add(word, tier)
    for word, tier in EXTRA_WORDS:
        add(word, tier)
    for word, tier, plural in NOUNS:
        add(word, tier)
        p = plural_of(word, plural)
        if p:
            add(p, tier + 1)
    for word, tier in EXTRA_NOUNS:
        add(word, tier)
        if word not in NO_PLURAL:
            p = plural_of(word, "s")
            if p:
                add(p, tier + 1)
    for base, tier, forms in VERBS:
        add(base, tier)
        if forms in ("r", "d"):
            past, ing, third = regular_verb_forms(base, forms == "d")
            add(past, tier + 1)
            add(ing, tier + 1)
            add(third, tier + 1)
        else:
            past, part, ing, third = forms.split(":")
            for f in (past, part, ing, third):
                add(f, tier + 1)
    for word, tier, adv in ADJS:
        add(word, tier)
        a = adverb_of(word, adv)
        if a:
            add(a, tier + 1)

    return entries


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "src" / "punctext" / "assets" / "dictionary.txt"
    )
    entries = build_entries()
    ranked = sorted(entries.items(), key=lambda kv: (-kv[1], kv[0]))
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        for word, count in ranked:
            fh.write(f"{word} {count}\n")
    print(f"wrote {len(ranked)} entries to {out}")


if __name__ == "__main__":
    main()
