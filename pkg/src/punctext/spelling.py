"""Dictionary lookup within bounded edit distance for patterns with '*' gaps.

A pattern is a lowercase alphabetic string that may contain '*' placeholders.
'*' is a literal out-of-alphabet symbol: it never matches a dictionary
character, so resolving one always costs at least one edit. Queries whose
distance budget exactly equals the star count therefore reduce to resolving
each star by substitution or deletion, which is answered from length-bucketed
arrays; all other queries walk a character trie carrying a Levenshtein row.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .corpus import Dictionary

WILDCARD = "*"

_PATTERN_OK = re.compile(r"[a-z*]*\Z")

# Words longer than this are treated as unscorable/unmatchable; bounds the
# worst-case DP work per query.
MAX_PATTERN_LEN = 24


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance with unit-cost insert, delete, and substitute."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(cur[j - 1] + 1, prev[j] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


@dataclass(frozen=True)
class CandidateSet:
    """Dictionary words within the queried distance, ordered by descending
    frequency then lexicographically."""

    words: tuple[str, ...]

    @property
    def K(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)


def star_count(pattern: str) -> int:
    return pattern.count(WILDCARD)


def _validate_pattern(pattern: str) -> str:
    p = pattern.lower()
    if not _PATTERN_OK.match(p):
        raise ValueError(f"pattern may contain only a-z and '*': {pattern!r}")
    return p


class _TrieNode:
    __slots__ = ("children", "word")

    def __init__(self):
        self.children: dict[str, _TrieNode] = {}
        self.word: str | None = None


class WordIndex:
    """Immutable lookup index over a Dictionary.

    Shareable across workers; all queries are pure.
    """

    def __init__(self, dictionary: Dictionary):
        self._dict = dictionary
        by_len: dict[int, list[str]] = {}
        for w in dictionary:
            by_len.setdefault(len(w), []).append(w)
        self._bucket_words: dict[int, list[str]] = {}
        self._bucket_codes: dict[int, np.ndarray] = {}
        for length, words in by_len.items():
            words.sort()
            self._bucket_words[length] = words
            codes = np.frombuffer("".join(words).encode("ascii"), dtype=np.uint8)
            self._bucket_codes[length] = codes.reshape(len(words), length)
        self._root = _TrieNode()
        for w in dictionary:
            node = self._root
            for ch in w:
                node = node.children.setdefault(ch, _TrieNode())
            node.word = w

    @property
    def dictionary(self) -> Dictionary:
        return self._dict

    def _order(self, words) -> CandidateSet:
        ranked = sorted(set(words), key=lambda w: (-self._dict.freq(w), w))
        return CandidateSet(tuple(ranked))

    def _wildcard_matches(self, pattern: str) -> list[str]:
        """Words of exactly len(pattern) matching it with '*' as one-char wildcards."""
        length = len(pattern)
        if length == 0 or length not in self._bucket_words:
            return []
        fixed = [(i, ch) for i, ch in enumerate(pattern) if ch != WILDCARD]
        words = self._bucket_words[length]
        if not fixed:
            return list(words)
        codes = self._bucket_codes[length]
        pos = np.fromiter((i for i, _ in fixed), dtype=np.intp)
        chars = np.frombuffer("".join(ch for _, ch in fixed).encode("ascii"),
                              dtype=np.uint8)
        mask = (codes[:, pos] == chars).all(axis=1)
        return [words[i] for i in np.flatnonzero(mask)]

    def _star_budget_matches(self, pattern: str) -> set[str]:
        """Candidates when the distance budget equals the star count: every
        star is independently substituted by one character or deleted."""
        stars = [i for i, ch in enumerate(pattern) if ch == WILDCARD]
        found: set[str] = set()
        for n_del in range(len(stars) + 1):
            for dropped in combinations(stars, n_del):
                reduced = "".join(ch for i, ch in enumerate(pattern)
                                  if i not in dropped)
                if WILDCARD in reduced:
                    found.update(self._wildcard_matches(reduced))
                elif reduced in self._dict:
                    found.add(reduced)
        return found

    def _trie_search(self, pattern: str, d: int) -> list[str]:
        results: list[str] = []
        n = len(pattern)
        first = list(range(n + 1))
        stack = [(child, ch, first) for ch, child in self._root.children.items()]
        while stack:
            node, ch, prev = stack.pop()
            row = [prev[0] + 1]
            for j in range(1, n + 1):
                row.append(min(row[j - 1] + 1, prev[j] + 1,
                               prev[j - 1] + (pattern[j - 1] != ch)))
            if node.word is not None and row[-1] <= d:
                results.append(node.word)
            if min(row) <= d:
                stack.extend((c, cch, row) for cch, c in node.children.items())
        return results

    def candidates(self, pattern: str, d: int) -> CandidateSet:
        """All dictionary words within edit distance `d` of `pattern`."""
        if d < 0:
            raise ValueError("distance must be non-negative")
        p = _validate_pattern(pattern)
        stars = star_count(p)
        if len(p) > MAX_PATTERN_LEN or not p:
            return CandidateSet(())
        if d < stars:
            return CandidateSet(())
        if stars == 0 and d == 0:
            return self._order([p] if p in self._dict else [])
        if d == stars:
            return self._order(self._star_budget_matches(p))
        return self._order(self._trie_search(p, d))

    def split_pairs(self, pattern: str) -> set[tuple[str, str]]:
        """Word pairs (u, v) such that turning one '*' into a space and the
        remaining stars into one-character wildcards yields "u v"."""
        p = _validate_pattern(pattern)
        if star_count(p) < 1:
            raise ValueError("split lookup requires at least one '*'")
        pairs: set[tuple[str, str]] = set()
        for i, ch in enumerate(p):
            if ch != WILDCARD:
                continue
            left, right = p[:i], p[i + 1:]
            if not left or not right:
                continue
            lefts = (self._wildcard_matches(left) if WILDCARD in left
                     else ([left] if left in self._dict else []))
            if not lefts:
                continue
            rights = (self._wildcard_matches(right) if WILDCARD in right
                      else ([right] if right in self._dict else []))
            for u in lefts:
                for v in rights:
                    pairs.add((u, v))
        return pairs
