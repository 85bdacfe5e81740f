import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from punctext.corpus import Dictionary
from punctext.spelling import (MAX_PATTERN_LEN, CandidateSet, WordIndex,
                               edit_distance, star_count)

from oracles import edit_distance_ref

WORDS = st.text(alphabet="abcdefg", max_size=8)


def test_edit_distance_paper_example():
    assert edit_distance("kitten", "sitting") == 3


@given(WORDS)
def test_edit_distance_identity(x):
    assert edit_distance(x, x) == 0


def test_star_is_ordinary_distinct_symbol():
    assert edit_distance("s*mmer", "summer") == 1
    assert edit_distance("*", "a") == 1
    assert edit_distance("**", "ab") == 2


@given(WORDS, WORDS)
def test_edit_distance_symmetry(a, b):
    assert edit_distance(a, b) == edit_distance(b, a)


@given(WORDS, WORDS, WORDS)
@settings(max_examples=200)
def test_edit_distance_triangle(a, b, c):
    assert edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c)


@given(WORDS, WORDS)
def test_edit_distance_matches_reference(a, b):
    assert edit_distance(a, b) == edit_distance_ref(a, b)


def test_candidates_unique_completion(index):
    cand = index.candidates("summ*r", 1)
    assert cand.words == ("summer",)
    assert cand.K == 1


def test_candidates_exact_membership(index):
    assert index.candidates("summer", 0).words == ("summer",)
    assert index.candidates("zzzzqq", 0).K == 0


def test_candidates_star_resolutions(index):
    cand = index.candidates("s*mmer", 1)
    assert set(cand.words) == {"summer", "simmer"}


def test_candidate_ordering_frequency_then_lexicographic(tiny_dictionary):
    idx = WordIndex(tiny_dictionary)
    cand = idx.candidates("c*t", 1)
    # cat (120) > cut (80) > cot (5); deletion "ct" is no word
    assert cand.words == ("cat", "cut", "cot")


def test_candidates_below_star_count_budget_empty(index):
    assert index.candidates("s*mm*r", 1).K == 0


def test_candidates_long_pattern_out_of_vocabulary(index):
    assert index.candidates("a" * (MAX_PATTERN_LEN + 1), 2).K == 0


def test_candidates_rejects_bad_symbols(index):
    with pytest.raises(ValueError):
        index.candidates("ab?c", 1)
    with pytest.raises(ValueError):
        index.candidates("ab c", 1)


def test_candidates_negative_distance(index):
    with pytest.raises(ValueError):
        index.candidates("cat", -1)


def _random_patterns(rng, count, max_len=8, max_stars=2):
    out = []
    for _ in range(count):
        length = rng.randint(1, max_len)
        chars = [rng.choice("abcdefghijklmnopqrstuvwxyz")
                 for _ in range(length)]
        for pos in rng.sample(range(length),
                              rng.randint(0, min(max_stars, length))):
            chars[pos] = "*"
        out.append("".join(chars))
    return out


def test_candidates_match_brute_force_sample(index, brute):
    rng = random.Random(1234)
    for pattern in _random_patterns(rng, 100):
        for d in (1, 2):
            got = set(index.candidates(pattern, d).words)
            want = brute.candidates(pattern, d)
            assert got == want, (pattern, d)


def test_candidates_monotone_in_distance(index):
    rng = random.Random(99)
    for pattern in _random_patterns(rng, 40):
        prev: set = set()
        for d in (star_count(pattern), star_count(pattern) + 1,
                  star_count(pattern) + 2):
            cur = set(index.candidates(pattern, d).words)
            assert prev <= cur
            prev = cur


def test_dictionary_word_inclusion_property(index):
    rng = random.Random(5)
    words = rng.sample(sorted(index.dictionary), 50)
    for w in words:
        if len(w) > MAX_PATTERN_LEN:
            continue
        i = rng.randrange(len(w))
        pattern = w[:i] + "*" + w[i + 1:]
        assert w in index.candidates(pattern, 1)


def test_split_pairs_simple(index):
    assert index.split_pairs("the*cat") == {("the", "cat")}


def test_split_pairs_no_valid_split(index):
    assert index.split_pairs("c*ramel") == set()


def test_split_pairs_tiny_dict():
    idx = WordIndex(Dictionary({"a": 1, "b": 1}))
    assert idx.split_pairs("a*b") == {("a", "b")}


def test_split_pairs_requires_star(index):
    with pytest.raises(ValueError):
        index.split_pairs("plain")


def test_split_pairs_with_extra_wildcard(tiny_dictionary):
    idx = WordIndex(tiny_dictionary)
    # one star becomes the space, the other a single-character wildcard
    assert ("the", "cat") in idx.split_pairs("the*c*t")


def test_candidate_set_contains():
    cs = CandidateSet(("summer", "simmer"))
    assert "summer" in cs and "winter" not in cs
    assert len(cs) == 2 and list(cs) == ["summer", "simmer"]
