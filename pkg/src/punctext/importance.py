"""Per-character importance scoring, seeded filter banks, and puncturing.

Scores are non-positive: 0 marks a character that must be kept (removing it
would leave the word unrecoverable or it carries no dictionary signal), and
more negative values mark characters whose removal leaves fewer plausible
dictionary completions. A filter is a binary keep-mask over a fixed-length
window; selection keeps the filter maximizing the inner product with the
window's score vector, which punctures the most recoverable characters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .corpus import TokenizedText, Word
from .spelling import WILDCARD, WordIndex

MAX_SCORED_WORD_LEN = 24


@dataclass(frozen=True)
class ScoreParams:
    """Weights for the character scores; requires alpha > beta > gamma > 0."""

    alpha: float = 3.0
    beta: float = 2.0
    gamma: float = 1.0
    delta: float = 2.0

    def __post_init__(self):
        if not (self.alpha > self.beta > self.gamma > 0):
            raise ValueError("score weights must satisfy alpha > beta > gamma > 0")
        if self.delta <= 0:
            raise ValueError("delta must be positive")


@dataclass(frozen=True)
class ScoreVector:
    scores: np.ndarray
    params: ScoreParams

    def __len__(self) -> int:
        return len(self.scores)


def _stage_score(count: int, params: ScoreParams) -> float:
    if count == 0:
        return 0.0
    if count == 1:
        return -params.alpha
    return -params.beta / count


def word_character_score(word: str, index: WordIndex,
                         params: ScoreParams) -> np.ndarray:
    """Two-stage per-character score for a lowercase alphabetic word.

    Stage one finds the character whose removal leaves the fewest
    one-edit completions containing the word itself; stage two repeats
    with that character already removed and a two-edit budget. Counts from
    stage two also score the remaining characters at the gamma weight.
    """
    n = len(word)
    scores = np.zeros(n)
    if n == 0 or n > MAX_SCORED_WORD_LEN or word not in index.dictionary:
        return scores

    counts = np.zeros(n, dtype=int)
    for i in range(n):
        cand = index.candidates(word[:i] + WILDCARD + word[i + 1:], 1)
        counts[i] = cand.K if word in cand else 0
    l1 = int(np.argmin(counts))
    scores[l1] = _stage_score(int(counts[l1]), params)
    if n == 1:
        return scores

    counts2 = np.zeros(n, dtype=int)
    for j in range(n):
        if j == l1:
            continue
        a, b = sorted((l1, j))
        pattern = word[:a] + WILDCARD + word[a + 1:b] + WILDCARD + word[b + 1:]
        cand = index.candidates(pattern, 2)
        counts2[j] = cand.K if word in cand else 0
    l2 = min((j for j in range(n) if j != l1), key=lambda j: (counts2[j], j))
    scores[l2] = _stage_score(int(counts2[l2]), params)

    for k in range(n):
        if k == l1 or k == l2:
            continue
        scores[k] = 0.0 if counts2[k] == 0 else -params.gamma / counts2[k]
    return scores


def nonword_character_score(preceding_word: str | None, index: WordIndex,
                            params: ScoreParams) -> float:
    """Score for a space/punctuation/digit from the word directly before it."""
    if not preceding_word:
        return 0.0
    word = preceding_word.lower()
    if not word.isalpha() or len(word) >= MAX_SCORED_WORD_LEN:
        return 0.0
    cand = index.candidates(word + WILDCARD, 1)
    if cand.K == 0:
        return 0.0
    return -params.delta / cand.K


class ImportanceScorer:
    """Caches per-word scores so repeated corpus words are scored once."""

    def __init__(self, index: WordIndex, params: ScoreParams):
        self.index = index
        self.params = params
        self._word_cache: dict[str, np.ndarray] = {}
        self._nonword_cache: dict[str, float] = {}

    def word_scores(self, word: str) -> np.ndarray:
        key = word.lower()
        hit = self._word_cache.get(key)
        if hit is None:
            hit = word_character_score(key, self.index, self.params)
            self._word_cache[key] = hit
        return hit

    def nonword_score(self, preceding_word: str | None) -> float:
        if not preceding_word:
            return 0.0
        key = preceding_word.lower()
        hit = self._nonword_cache.get(key)
        if hit is None:
            hit = nonword_character_score(key, self.index, self.params)
            self._nonword_cache[key] = hit
        return hit

    def score_text(self, tok: TokenizedText) -> np.ndarray:
        """Scores for every character of the text; words straddling window
        boundaries are handled for free since scoring is per-token."""
        out = np.zeros(len(tok.chars))
        prev_token = None
        for token in tok.tokens:
            if isinstance(token, Word):
                out[token.start:token.start + token.length] = \
                    self.word_scores(token.text)
            else:
                if isinstance(prev_token, Word) and \
                        prev_token.start + prev_token.length == token.index:
                    out[token.index] = self.nonword_score(prev_token.text)
            prev_token = token
        return out


def score_window(tok: TokenizedText, start: int, stop: int,
                 scorer: ImportanceScorer) -> ScoreVector:
    """Score vector for the window [start, stop); containing words are scored
    whole and only in-window positions are returned."""
    full = scorer.score_text(tok)
    return ScoreVector(scores=full[start:stop], params=scorer.params)


@dataclass(frozen=True)
class FilterBank:
    """Seeded bank of binary keep-masks, reproducible from
    (seed, num_filters, window_len, keep_ratio) alone."""

    filters: np.ndarray  # (num_filters, window_len) uint8
    seed: int
    keep_ratio: float

    @property
    def num_filters(self) -> int:
        return self.filters.shape[0]

    @property
    def window_len(self) -> int:
        return self.filters.shape[1]

    @property
    def ones(self) -> int:
        return int(self.filters[0].sum())


def build_filter_bank(seed: int, num_filters: int, window_len: int,
                      keep_ratio: float) -> FilterBank:
    """Sample `num_filters` distinct masks with round(window_len * keep_ratio)
    ones each, using a counter-based generator keyed per filter so transmitter
    and receiver rebuild identical banks from the shared seed."""
    if not 0 < keep_ratio <= 1:
        raise ValueError("keep_ratio must be in (0, 1]")
    if num_filters < 1 or num_filters & (num_filters - 1):
        raise ValueError("num_filters must be a positive power of two")
    ones = round(window_len * keep_ratio)
    if ones < 1:
        raise ValueError("keep_ratio keeps zero characters per window")
    space = math.comb(window_len, ones)
    filters = np.zeros((num_filters, window_len), dtype=np.uint8)
    seen: set[bytes] = set()
    for idx in range(num_filters):
        for attempt in range(10_000):
            ss = np.random.SeedSequence(entropy=seed, spawn_key=(idx, attempt))
            rng = np.random.Generator(np.random.Philox(seed=ss))
            positions = rng.choice(window_len, size=ones, replace=False)
            mask = np.zeros(window_len, dtype=np.uint8)
            mask[positions] = 1
            key = mask.tobytes()
            # duplicates are only tolerated once the space is exhausted
            # (e.g. keep_ratio 1 has a single possible mask)
            if key not in seen or len(seen) >= space:
                seen.add(key)
                filters[idx] = mask
                break
        else:
            raise RuntimeError("could not sample a distinct filter")
    return FilterBank(filters=filters, seed=seed, keep_ratio=keep_ratio)


def select_filter(scores: np.ndarray, bank: FilterBank) -> tuple[np.ndarray, int]:
    """Filter maximizing the keep-mask/score inner product; ties break to the
    lowest index."""
    if len(scores) != bank.window_len:
        raise ValueError("score vector length must equal the filter length")
    idx = int(np.argmax(bank.filters @ np.asarray(scores, dtype=float)))
    return bank.filters[idx], idx


def puncture(window: str, filt: np.ndarray) -> str:
    """Keep exactly the characters at mask-one positions, order preserved."""
    if len(filt) < len(window):
        raise ValueError("filter shorter than window")
    return "".join(ch for ch, bit in zip(window, filt) if bit)


def estimate_recovery_probability(pattern: str, index: WordIndex,
                                  d: int) -> float:
    """1/K over the candidate set; 0 when no candidates exist."""
    k = index.candidates(pattern, d).K
    return 1.0 / k if k else 0.0


@dataclass(frozen=True)
class PuncturePlan:
    """Transmitter-side puncturing of a whole text into windows."""

    payload: str
    filter_indices: tuple[int, ...]  # one per window, tail included as 0
    window_count: int
    tail_unpunctured: bool
    kept_per_window: tuple[int, ...] = field(repr=False, default=())


def puncture_text(tok: TokenizedText, scorer: ImportanceScorer,
                  bank: FilterBank, chooser=None) -> PuncturePlan:
    """Split the text into consecutive windows, pick one filter per full
    window, and keep the final partial window unpunctured (index field 0).

    `chooser(window_scores, bank) -> index` overrides proposed selection,
    e.g. for a random-selection control arm.
    """
    text = tok.chars
    window_len = bank.window_len
    scores = scorer.score_text(tok)
    full_windows, tail_len = divmod(len(text), window_len)
    indices: list[int] = []
    kept: list[str] = []
    for w in range(full_windows):
        lo = w * window_len
        window_scores = scores[lo:lo + window_len]
        if chooser is None:
            _, idx = select_filter(window_scores, bank)
        else:
            idx = int(chooser(window_scores, bank))
        indices.append(idx)
        kept.append(puncture(text[lo:lo + window_len], bank.filters[idx]))
    tail = text[full_windows * window_len:]
    if tail:
        indices.append(0)
        kept.append(tail)
    return PuncturePlan(
        payload="".join(kept),
        filter_indices=tuple(indices),
        window_count=full_windows + (1 if tail else 0),
        tail_unpunctured=bool(tail),
        kept_per_window=tuple(len(k) for k in kept),
    )
