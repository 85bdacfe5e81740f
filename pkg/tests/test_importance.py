import random

import numpy as np
import pytest

from punctext.corpus import tokenize
from punctext.importance import (FilterBank, ScoreParams,
                                 build_filter_bank,
                                 estimate_recovery_probability,
                                 nonword_character_score, puncture,
                                 puncture_text, score_window, select_filter,
                                 word_character_score)

from oracles import nonword_score_ref, select_filter_ref, word_score_ref


def test_params_ordering_enforced():
    with pytest.raises(ValueError):
        ScoreParams(alpha=1.0, beta=2.0, gamma=0.5)
    with pytest.raises(ValueError):
        ScoreParams(delta=0.0)


def test_summer_unique_position_gets_alpha(index, params):
    scores = word_character_score("summer", index, params)
    assert scores[4] == -params.alpha  # 'e': single completion


def test_summer_second_stage_gets_beta_over_two(index, params):
    scores = word_character_score("summer", index, params)
    assert scores[1] == -params.beta / 2  # 'u': {summer, simmer}


def test_out_of_vocabulary_word_scores_zero(index, params):
    assert "steven" not in index.dictionary
    assert (word_character_score("steven", index, params) == 0).all()


def test_single_character_word_only_first_stage(index, params):
    scores = word_character_score("a", index, params)
    assert scores.shape == (1,)
    # "*" at distance 1 reaches every one- and two-letter word
    cand = index.candidates("*", 1)
    assert scores[0] == pytest.approx(-params.beta / cand.K)


def test_word_scores_match_reference_transcription(index, brute, params):
    rng = random.Random(77)
    words = [w for w in rng.sample(sorted(index.dictionary), 40)
             if 2 <= len(w) <= 10]
    for word in words:
        got = word_character_score(word, index, params)
        want = word_score_ref(word, brute, params.alpha, params.beta,
                              params.gamma)
        assert np.allclose(got, want), word


def test_all_scores_non_positive(index, params):
    for word in ("summer", "the", "government", "caramel"):
        assert (word_character_score(word, index, params) <= 0).all()


def test_nonword_score_matches_brute_force(index, brute, params):
    for word in ("caramel", "summe", "the", "cake"):
        got = nonword_character_score(word, index, params)
        assert got == pytest.approx(nonword_score_ref(word, brute,
                                                      params.delta))


def test_nonword_score_isolated_word_is_zero(index, params):
    # no dictionary word within one edit of this pattern
    assert "qzqzq" not in index.dictionary
    assert nonword_character_score("qzqzq", index, params) == 0.0


def test_nonword_score_absent_word_with_near_match(index, params):
    # "summe" is not a word but "summer" completes it
    assert "summe" not in index.dictionary
    score = nonword_character_score("summe", index, params)
    cand = index.candidates("summe*", 1)
    assert "summer" in cand
    assert score == pytest.approx(-params.delta / cand.K)


def test_nonword_score_no_preceding_word(index, params):
    assert nonword_character_score(None, index, params) == 0.0
    assert nonword_character_score("", index, params) == 0.0


def test_score_window_composition(index, params, scorer):
    tok = tokenize("summer ")
    vec = score_window(tok, 0, 7, scorer)
    word_part = word_character_score("summer", index, params)
    space = nonword_character_score("summer", index, params)
    assert np.allclose(vec.scores[:6], word_part)
    assert vec.scores[6] == pytest.approx(space)


def test_score_window_empty(scorer):
    tok = tokenize("abc")
    assert len(score_window(tok, 1, 1, scorer)) == 0


def test_score_window_all_oov(index, params, scorer):
    tok = tokenize("qzk vxq")
    vec = score_window(tok, 0, len(tok.chars), scorer)
    assert (vec.scores == 0).all()


def test_straddling_word_scored_whole(index, params, scorer):
    # window boundary in the middle of "summer": in-window entries must equal
    # the corresponding slice of the whole-word scores
    tok = tokenize("xqzv summer")
    full = scorer.score_text(tok)
    word_part = word_character_score("summer", index, params)
    assert np.allclose(full[5:11], word_part)
    vec = score_window(tok, 0, 8, scorer)
    assert np.allclose(vec.scores[5:8], word_part[:3])


def test_nonword_needs_adjacent_word(scorer):
    # the space after '.' has no directly preceding word: score 0
    tok = tokenize("cake. x")
    scores = scorer.score_text(tok)
    assert scores[4] != 0.0   # '.' directly follows "cake"
    assert scores[5] == 0.0   # ' ' follows '.'


def test_filter_bank_popcount_and_distinct():
    bank = build_filter_bank(seed=3, num_filters=64, window_len=40,
                             keep_ratio=0.9)
    assert bank.filters.shape == (64, 40)
    assert (bank.filters.sum(axis=1) == 36).all()
    assert len({f.tobytes() for f in bank.filters}) == 64
    assert bank.ones == 36


def test_filter_bank_reproducible():
    a = build_filter_bank(seed=9, num_filters=16, window_len=40,
                          keep_ratio=0.8)
    b = build_filter_bank(seed=9, num_filters=16, window_len=40,
                          keep_ratio=0.8)
    assert (a.filters == b.filters).all()
    c = build_filter_bank(seed=10, num_filters=16, window_len=40,
                          keep_ratio=0.8)
    assert (a.filters != c.filters).any()


def test_filter_bank_degenerate_keep_ratio_one():
    bank = build_filter_bank(seed=1, num_filters=4, window_len=8,
                             keep_ratio=1.0)
    assert (bank.filters == 1).all()


def test_filter_bank_validation():
    with pytest.raises(ValueError):
        build_filter_bank(seed=1, num_filters=3, window_len=40, keep_ratio=0.9)
    with pytest.raises(ValueError):
        build_filter_bank(seed=1, num_filters=4, window_len=40, keep_ratio=0.0)


def test_select_filter_all_zero_scores_picks_lowest_index():
    bank = build_filter_bank(seed=2, num_filters=8, window_len=10,
                             keep_ratio=0.8)
    _, idx = select_filter(np.zeros(10), bank)
    assert idx == 0


def test_select_filter_single_filter():
    bank = build_filter_bank(seed=2, num_filters=1, window_len=10,
                             keep_ratio=0.8)
    _, idx = select_filter(np.random.default_rng(0).normal(size=10) - 5, bank)
    assert idx == 0


def test_select_filter_matches_exhaustive_scan():
    rng = np.random.default_rng(11)
    for trial in range(50):
        bank = build_filter_bank(seed=trial, num_filters=64, window_len=40,
                                 keep_ratio=0.9)
        scores = -rng.random(40)
        _, idx = select_filter(scores, bank)
        assert idx == select_filter_ref(scores, bank.filters)


def test_select_filter_dominance():
    bank = build_filter_bank(seed=5, num_filters=32, window_len=40,
                             keep_ratio=0.9)
    scores = -np.random.default_rng(5).random(40)
    filt, _ = select_filter(scores, bank)
    best = filt @ scores
    assert all(best >= f @ scores for f in bank.filters)


def test_puncture_drops_marked_position():
    filt = np.array([1, 0, 1, 1, 1, 1, 1], dtype=np.uint8)
    assert puncture("caramel", filt) == "cramel"


def test_puncture_all_ones_identity():
    assert puncture("caramel", np.ones(7, dtype=np.uint8)) == "caramel"


def test_puncture_window_length_bookkeeping():
    bank = build_filter_bank(seed=4, num_filters=16, window_len=40,
                             keep_ratio=0.9)
    window = "x" * 40
    assert len(puncture(window, bank.filters[3])) == 36


def test_puncture_rejects_short_filter():
    with pytest.raises(ValueError):
        puncture("abc", np.array([1, 1]))


def test_estimate_recovery_probability(index, brute):
    assert estimate_recovery_probability("summ*r", index, 1) == 1.0
    assert estimate_recovery_probability("qqqteb", index, 0) == 0.0
    rng = random.Random(3)
    for word in rng.sample(sorted(index.dictionary), 20):
        if not 3 <= len(word) <= 8:
            continue
        i = rng.randrange(len(word))
        pattern = word[:i] + "*" + word[i + 1:]
        k = len(brute.candidates(pattern, 1))
        assert estimate_recovery_probability(pattern, index, 1) == \
            pytest.approx(1.0 / k if k else 0.0)


def test_puncture_text_deterministic(scorer, corpus):
    bank = build_filter_bank(seed=6, num_filters=64, window_len=40,
                             keep_ratio=0.9)
    tok = tokenize(corpus[0])
    a = puncture_text(tok, scorer, bank)
    b = puncture_text(tok, scorer, bank)
    assert a == b


def test_puncture_text_window_accounting(scorer, corpus):
    bank = build_filter_bank(seed=6, num_filters=64, window_len=40,
                             keep_ratio=0.9)
    sentence = corpus[1]
    tok = tokenize(sentence)
    plan = puncture_text(tok, scorer, bank)
    full, tail = divmod(len(sentence), 40)
    assert plan.window_count == full + (1 if tail else 0)
    assert plan.tail_unpunctured == bool(tail)
    assert len(plan.filter_indices) == plan.window_count
    expected = full * bank.ones + tail
    assert len(plan.payload) == expected
    if tail:
        assert plan.filter_indices[-1] == 0
        assert plan.payload.endswith(sentence[full * 40:])


def test_puncture_text_keep_ratio_one_is_identity(scorer, corpus):
    bank = build_filter_bank(seed=6, num_filters=1, window_len=40,
                             keep_ratio=1.0)
    sentence = corpus[2]
    plan = puncture_text(tokenize(sentence), scorer, bank)
    assert plan.payload == sentence


def test_filter_bank_direct_construction():
    filters = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    bank = FilterBank(filters=filters, seed=0, keep_ratio=2 / 3)
    assert bank.num_filters == 2 and bank.window_len == 3 and bank.ones == 2
