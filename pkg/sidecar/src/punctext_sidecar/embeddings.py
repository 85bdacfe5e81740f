"""Embedding backends for the /embed endpoint.

The transformer backend wraps a published sentence encoder when one is
available; the hashed n-gram backend is a deterministic offline stand-in.
Both return unit-normalized vectors and advertise their pooling scheme in
the model id.
"""

from __future__ import annotations

import hashlib
import logging

import numpy as np

logger = logging.getLogger(__name__)


class HashedNgramBackend:
    """Character trigram feature hashing; deterministic, no model download."""

    def __init__(self, dim: int = 256, n: int = 3):
        self.dim = dim
        self.n = n
        self.model_id = f"hashed-ngram-{dim}-sum-pool"

    def encode(self, texts: list[str]) -> np.ndarray:
        out = np.zeros((len(texts), self.dim))
        for row, text in enumerate(texts):
            padded = f"  {text.lower()}  "
            for i in range(len(padded) - self.n + 1):
                gram = padded[i:i + self.n]
                h = int.from_bytes(
                    hashlib.blake2b(gram.encode(), digest_size=8).digest(),
                    "big")
                out[row, h % self.dim] += 1.0 if (h >> 63) else -1.0
        norms = np.linalg.norm(out, axis=1, keepdims=True)
        np.divide(out, norms, out=out, where=norms > 0)
        return out


class TransformerBackend:
    """sentence-transformers encoder; pooling follows the model's own config."""

    def __init__(self, model_name: str):
        from sentence_transformers import SentenceTransformer

        self._model = SentenceTransformer(model_name)
        self.dim = int(self._model.get_sentence_embedding_dimension())
        self.model_id = f"{model_name}+model-default-pooling"

    def encode(self, texts: list[str]) -> np.ndarray:
        return np.asarray(self._model.encode(texts, convert_to_numpy=True,
                                             normalize_embeddings=True))


def load_backend(model_name: str, dim: int):
    """Build the configured backend; None signals a failed model load."""
    if model_name in ("", "hashed"):
        return HashedNgramBackend(dim=dim)
    try:
        return TransformerBackend(model_name)
    except Exception as exc:  # model missing, no network, bad weights
        logger.error("could not load embedding model %r: %s", model_name, exc)
        return None
