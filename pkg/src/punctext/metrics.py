"""Evaluation metrics: sentence BLEU, embedding cosine similarity, and
character/word accuracy, plus the per-trial record schema."""

from __future__ import annotations

import hashlib
import math
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Optional, Protocol, Sequence

import numpy as np
import requests

from .errors import EmptyInput, ProviderUnavailable
from .spelling import edit_distance


def _ngrams(words: Sequence[str], n: int) -> Counter:
    return Counter(tuple(words[i:i + n]) for i in range(len(words) - n + 1))


def bleu(reference: str, candidate: str, max_n: int = 4) -> float:
    """Sentence BLEU with uniform weights and no smoothing: any zero n-gram
    precision zeroes the score; brevity penalty e^(1-r/c) when c <= r."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    ref = reference.split()
    cand = candidate.split()
    if not ref or not cand:
        raise EmptyInput("BLEU requires non-empty word sequences")
    precisions = []
    for n in range(1, max_n + 1):
        cand_counts = _ngrams(cand, n)
        total = sum(cand_counts.values())
        if total == 0:
            return 0.0
        ref_counts = _ngrams(ref, n)
        clipped = sum(min(c, ref_counts[g]) for g, c in cand_counts.items())
        if clipped == 0:
            return 0.0
        precisions.append(clipped / total)
    c, r = len(cand), len(ref)
    bp = 1.0 if c > r else math.exp(1.0 - r / c)
    return bp * math.exp(sum(math.log(p) for p in precisions) / max_n)


class EmbeddingProvider(Protocol):
    def embed(self, texts: list[str]) -> list[list[float]]: ...


class HttpEmbeddingProvider:
    """Client for the sidecar-style JSON interface {texts} -> {vectors}."""

    def __init__(self, url: str, timeout: float = 30.0):
        self.url = url
        self.timeout = timeout
        self._dim: Optional[int] = None

    def embed(self, texts: list[str]) -> list[list[float]]:
        try:
            resp = requests.post(self.url, json={"texts": texts},
                                 timeout=self.timeout)
        except requests.RequestException as exc:
            raise ProviderUnavailable(str(exc)) from exc
        if resp.status_code != 200:
            raise ProviderUnavailable(f"status {resp.status_code}")
        try:
            vectors = resp.json()["vectors"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ProviderUnavailable(f"bad payload: {exc}") from exc
        if len(vectors) != len(texts):
            raise ProviderUnavailable("vector count does not match input")
        dims = {len(v) for v in vectors}
        if len(dims) != 1:
            raise ProviderUnavailable("inconsistent vector dimensions")
        dim = dims.pop()
        if self._dim is None:
            self._dim = dim
        elif dim != self._dim:
            raise ProviderUnavailable(
                f"provider dimension changed: {self._dim} -> {dim}")
        return vectors


class HashedNgramEmbedder:
    """Deterministic offline embedder (character n-gram feature hashing).

    Ships as the mock provider for tests and as an offline stand-in when no
    model service is configured; identical texts embed identically.
    """

    def __init__(self, dim: int = 256, n: int = 3):
        self.dim = dim
        self.n = n

    def _embed_one(self, text: str) -> list[float]:
        vec = np.zeros(self.dim)
        padded = f"  {text.lower()}  "
        for i in range(len(padded) - self.n + 1):
            gram = padded[i:i + self.n]
            h = int.from_bytes(
                hashlib.blake2b(gram.encode(), digest_size=8).digest(), "big")
            vec[h % self.dim] += 1.0 if (h >> 63) else -1.0
        norm = np.linalg.norm(vec)
        if norm > 0:
            vec /= norm
        return vec.tolist()

    def embed(self, texts: list[str]) -> list[list[float]]:
        return [self._embed_one(t) for t in texts]


def sentence_similarity(a: str, b: str, provider: EmbeddingProvider) -> float:
    """Cosine similarity of the provider's embeddings, clamped to [0, 1]."""
    va, vb = (np.asarray(v, dtype=float) for v in provider.embed([a, b]))
    denom = np.linalg.norm(va) * np.linalg.norm(vb)
    if denom == 0:
        return 0.0
    return float(np.clip(np.dot(va, vb) / denom, 0.0, 1.0))


def _alignment_matches(ref: Sequence[str], cand: Sequence[str]) -> int:
    """Matched positions under a minimum-edit alignment; among minimum-cost
    alignments the one with the most matches is used (deterministic)."""
    n, m = len(ref), len(cand)
    # dp holds (cost, -matches); lexicographic min is the preferred alignment
    prev = [(j, 0) for j in range(m + 1)]
    for i in range(1, n + 1):
        cur = [(i, 0)]
        for j in range(1, m + 1):
            eq = ref[i - 1] == cand[j - 1]
            diag = (prev[j - 1][0] + (0 if eq else 1),
                    prev[j - 1][1] - (1 if eq else 0))
            best = min(diag, (prev[j][0] + 1, prev[j][1]),
                       (cur[j - 1][0] + 1, cur[j - 1][1]))
            cur.append(best)
        prev = cur
    return -prev[m][1]


def char_word_accuracy(reference: str, candidate: str) -> tuple[float, float]:
    """Character accuracy from normalized edit distance; word accuracy as the
    fraction of aligned equal words over the longer sequence."""
    if not reference and not candidate:
        return 1.0, 1.0
    char_acc = 1.0 - edit_distance(reference, candidate) / max(
        len(reference), len(candidate), 1)
    ref_words = reference.split()
    cand_words = candidate.split()
    if not ref_words and not cand_words:
        word_acc = 1.0
    else:
        matches = _alignment_matches(ref_words, cand_words)
        word_acc = matches / max(len(ref_words), len(cand_words))
    return char_acc, word_acc


@dataclass(frozen=True)
class EvalRecord:
    """One pipeline trial's scores and provenance."""

    bleu: float
    char_accuracy: float
    word_accuracy: float
    similarity: Optional[float]
    snr_db: Optional[float]
    keep_ratio: float
    num_filters: int
    backend: str
    seed: int
    symbols_per_character: float
    arm: str = "proposed"
    trial: int = 0
    sentence_index: int = 0
    failed: bool = False

    def to_dict(self) -> dict:
        return asdict(self)
