"""Independent reference implementations used as test oracles.

Everything here is deliberately separate from the production code paths:
plain dynamic programming, exhaustive scans, and a literal transcription of
the two-stage character-scoring rule driven by the brute-force lookup.
"""

from __future__ import annotations

import numpy as np


def edit_distance_ref(a: str, b: str) -> int:
    """Full-matrix Levenshtein DP."""
    n, m = len(a), len(b)
    dp = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        dp[i][0] = i
    for j in range(m + 1):
        dp[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            dp[i][j] = min(
                dp[i - 1][j] + 1,
                dp[i][j - 1] + 1,
                dp[i - 1][j - 1] + (a[i - 1] != b[j - 1]),
            )
    return dp[n][m]


class BruteForceLookup:
    """Scan every dictionary word with a (vectorized) Levenshtein DP.

    The DP is the textbook recurrence evaluated for all words of one length
    at once; it is cross-checked against edit_distance_ref in the tests.
    """

    def __init__(self, dictionary):
        self.dictionary = dictionary
        self.buckets: dict[int, tuple[list[str], np.ndarray]] = {}
        by_len: dict[int, list[str]] = {}
        for w in dictionary:
            by_len.setdefault(len(w), []).append(w)
        for length, words in by_len.items():
            words.sort()
            codes = np.frombuffer("".join(words).encode("ascii"), np.uint8)
            self.buckets[length] = (words, codes.reshape(len(words), length))

    def candidates(self, pattern: str, d: int) -> set[str]:
        p_codes = np.frombuffer(pattern.encode("ascii"), np.uint8)
        n = len(pattern)
        steps = np.arange(n + 1)
        found: set[str] = set()
        for length, (words, codes) in self.buckets.items():
            if abs(length - n) > d:
                continue
            rows = len(words)
            prev = np.broadcast_to(steps, (rows, n + 1)).astype(np.int64).copy()
            for i in range(1, length + 1):
                cur = np.empty_like(prev)
                cur[:, 0] = i
                sub = prev[:, :-1] + (codes[:, i - 1][:, None] != p_codes)
                cur[:, 1:] = np.minimum(sub, prev[:, 1:] + 1)
                # insertions: running minimum of cur[k] - k, plus j
                cur = np.minimum.accumulate(cur - steps, axis=1) + steps
                prev = cur
            for idx in np.flatnonzero(prev[:, n] <= d):
                found.add(words[idx])
        return found


def stage_score_ref(count: int, alpha: float, beta: float) -> float:
    if count == 0:
        return 0.0
    if count == 1:
        return -alpha
    return -beta / count


def word_score_ref(word: str, brute: BruteForceLookup, alpha: float,
                   beta: float, gamma: float) -> list[float]:
    """Straight-line transcription of the two-stage scoring rule using the
    brute-force lookup."""
    n = len(word)
    scores = [0.0] * n
    if n == 0 or word not in brute.dictionary:
        return scores
    counts = []
    for i in range(n):
        cand = brute.candidates(word[:i] + "*" + word[i + 1:], 1)
        counts.append(len(cand) if word in cand else 0)
    l1 = min(range(n), key=lambda i: (counts[i], i))
    scores[l1] = stage_score_ref(counts[l1], alpha, beta)
    if n == 1:
        return scores
    counts2 = [0] * n
    for j in range(n):
        if j == l1:
            continue
        a, b = sorted((l1, j))
        pattern = word[:a] + "*" + word[a + 1:b] + "*" + word[b + 1:]
        cand = brute.candidates(pattern, 2)
        counts2[j] = len(cand) if word in cand else 0
    l2 = min((j for j in range(n) if j != l1), key=lambda j: (counts2[j], j))
    scores[l2] = stage_score_ref(counts2[l2], alpha, beta)
    for k in range(n):
        if k in (l1, l2):
            continue
        scores[k] = 0.0 if counts2[k] == 0 else -gamma / counts2[k]
    return scores


def nonword_score_ref(word: str, brute: BruteForceLookup,
                      delta: float) -> float:
    cand = brute.candidates(word + "*", 1)
    return 0.0 if not cand else -delta / len(cand)


def select_filter_ref(scores, filters) -> int:
    """Exhaustive argmax with lowest-index tie-break."""
    best_idx = 0
    best = None
    for i, f in enumerate(filters):
        value = float(sum(fi * si for fi, si in zip(f, scores)))
        if best is None or value > best:
            best = value
            best_idx = i
    return best_idx


def alignment_matches_ref(ref: list[str], cand: list[str]) -> int:
    """Most matched pairs among minimum-cost alignments (recursive memo)."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def go(i: int, j: int) -> tuple[int, int]:
        if i == len(ref):
            return len(cand) - j, 0
        if j == len(cand):
            return len(ref) - i, 0
        eq = ref[i] == cand[j]
        dc, dm = go(i + 1, j + 1)
        best = (dc + (0 if eq else 1), -(dm + (1 if eq else 0)))
        for cost, matches in (go(i + 1, j), go(i, j + 1)):
            best = min(best, (cost + 1, -matches))
        return best[0], -best[1]

    return go(0, 0)[1]


def bleu_ref(reference: str, candidate: str, max_n: int) -> float:
    """Direct evaluation of clipped n-gram precision BLEU with uniform
    weights and the e^(1-r/c) brevity penalty."""
    import math
    from collections import Counter

    ref = reference.split()
    cand = candidate.split()
    logs = []
    for n in range(1, max_n + 1):
        cgrams = Counter(tuple(cand[i:i + n]) for i in range(len(cand) - n + 1))
        rgrams = Counter(tuple(ref[i:i + n]) for i in range(len(ref) - n + 1))
        total = sum(cgrams.values())
        clipped = sum(min(v, rgrams[g]) for g, v in cgrams.items())
        if total == 0 or clipped == 0:
            return 0.0
        logs.append(math.log(clipped / total))
    bp = 1.0 if len(cand) > len(ref) else math.exp(1 - len(ref) / len(cand))
    return bp * math.exp(sum(logs) / max_n)
