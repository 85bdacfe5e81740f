import random

import numpy as np
import pytest

from punctext.errors import EmptyInput, ProviderUnavailable
from punctext.metrics import (EvalRecord, HashedNgramEmbedder,
                              HttpEmbeddingProvider, bleu, char_word_accuracy,
                              sentence_similarity)

from oracles import alignment_matches_ref, bleu_ref


def test_bleu_identical_sentences():
    text = "the guild restored the ancient bridge near the harbor"
    assert bleu(text, text) == pytest.approx(1.0)


def test_bleu_hand_derived_case():
    # p1 = p2 = 1, BP = e^(1 - 3/2)
    assert bleu("the cat sat", "the cat", max_n=2) == \
        pytest.approx(0.60653, abs=1e-5)


def test_bleu_disjoint_vocabulary_is_zero():
    assert bleu("alpha beta gamma", "delta epsilon zeta") == 0.0


def test_bleu_zero_ngram_precision_zeroes_score():
    # shared unigrams but no shared bigram
    assert bleu("a b c d", "b a d c", max_n=2) == 0.0


def test_bleu_empty_raises():
    with pytest.raises(EmptyInput):
        bleu("", "words here")
    with pytest.raises(EmptyInput):
        bleu("words here", "")


def test_bleu_roles_are_asymmetric():
    ref = "the cat sat on mat"
    cand = "the cat"
    assert bleu(ref, cand, max_n=1) != bleu(cand, ref, max_n=1)


def test_bleu_matches_reference_on_random_pairs():
    rng = random.Random(31)
    vocab = ["the", "cat", "sat", "mat", "dog", "ran", "far", "near"]
    for _ in range(200):
        ref = " ".join(rng.choices(vocab, k=rng.randint(4, 12)))
        cand = " ".join(rng.choices(vocab, k=rng.randint(4, 12)))
        for n in (1, 2, 3, 4):
            assert bleu(ref, cand, max_n=n) == \
                pytest.approx(bleu_ref(ref, cand, n))


def test_bleu_short_candidate_beyond_ngram_order():
    assert bleu("the cat sat", "the", max_n=2) == 0.0


class _FixedProvider:
    def __init__(self, vectors):
        self.vectors = vectors

    def embed(self, texts):
        return [self.vectors[t] for t in texts]


def test_similarity_identical_texts():
    embedder = HashedNgramEmbedder()
    assert sentence_similarity("same text", "same text", embedder) == \
        pytest.approx(1.0)


def test_similarity_orthogonal_vectors():
    provider = _FixedProvider({"a": [1.0, 0.0], "b": [0.0, 1.0]})
    assert sentence_similarity("a", "b", provider) == 0.0


def test_similarity_hand_computed_cosine():
    provider = _FixedProvider({"a": [3.0, 4.0, 0.0], "b": [4.0, 3.0, 0.0]})
    assert sentence_similarity("a", "b", provider) == pytest.approx(0.96)


def test_similarity_negative_cosine_clamps_to_zero():
    provider = _FixedProvider({"a": [1.0, 0.0], "b": [-1.0, 0.0]})
    assert sentence_similarity("a", "b", provider) == 0.0


def test_hashed_embedder_is_unit_norm_and_deterministic():
    embedder = HashedNgramEmbedder()
    v1, v2 = embedder.embed(["the harbor", "the harbor"])
    assert v1 == v2
    assert np.linalg.norm(v1) == pytest.approx(1.0, abs=1e-9)


def test_http_provider_unreachable_raises():
    provider = HttpEmbeddingProvider("http://127.0.0.1:1/embed", timeout=0.2)
    with pytest.raises(ProviderUnavailable):
        provider.embed(["x"])


def test_char_word_accuracy_identical():
    assert char_word_accuracy("a b c", "a b c") == (1.0, 1.0)


def test_char_accuracy_single_deletion():
    char_acc, _ = char_word_accuracy("caramel", "cramel")
    assert char_acc == pytest.approx(6 / 7)


def test_word_accuracy_counts_aligned_matches():
    _, word_acc = char_word_accuracy("the cat sat", "the dog sat")
    assert word_acc == pytest.approx(2 / 3)


def test_accuracy_empty_candidate():
    char_acc, word_acc = char_word_accuracy("abc def", "")
    assert char_acc == 0.0 and word_acc == 0.0
    assert char_word_accuracy("", "") == (1.0, 1.0)


def test_word_accuracy_matches_alignment_oracle():
    rng = random.Random(17)
    vocab = ["a", "b", "c", "d"]
    for _ in range(150):
        ref = [rng.choice(vocab) for _ in range(rng.randint(0, 7))]
        cand = [rng.choice(vocab) for _ in range(rng.randint(0, 7))]
        if not ref and not cand:
            continue
        _, word_acc = char_word_accuracy(" ".join(ref), " ".join(cand))
        want = alignment_matches_ref(ref, cand) / max(len(ref), len(cand))
        assert word_acc == pytest.approx(want), (ref, cand)


def test_eval_record_round_trips_to_dict():
    rec = EvalRecord(bleu=0.5, char_accuracy=0.9, word_accuracy=0.8,
                     similarity=None, snr_db=2.0, keep_ratio=0.9,
                     num_filters=64, backend="deterministic", seed=7,
                     symbols_per_character=8.0)
    d = rec.to_dict()
    assert d["bleu"] == 0.5 and d["similarity"] is None
    assert 0.0 <= d["char_accuracy"] <= 1.0
