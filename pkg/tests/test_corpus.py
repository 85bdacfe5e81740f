import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from punctext.corpus import (Word, bundled_corpus, bundled_dictionary,
                             detokenize, load_corpus, load_dictionary,
                             load_squad_contexts, tokenize)
from punctext.errors import EmptyDictionary, UnsupportedCharacter

SUPPORTED = st.text(alphabet=st.characters(min_codepoint=0x20,
                                           max_codepoint=0x7E), max_size=120)


def token_shapes(tok):
    return [(t.text if isinstance(t, Word) else t.char,
             isinstance(t, Word)) for t in tok.tokens]


def test_tokenize_example_sentence():
    tok = tokenize("I ate caramel.")
    assert token_shapes(tok) == [
        ("I", True), (" ", False), ("ate", True), (" ", False),
        ("caramel", True), (".", False),
    ]


def test_tokenize_empty():
    tok = tokenize("")
    assert tok.chars == "" and tok.tokens == ()


def test_tokenize_digits_split_words():
    tok = tokenize("a1b")
    assert token_shapes(tok) == [("a", True), ("1", False), ("b", True)]


def test_tokenize_apostrophe_splits():
    tok = tokenize("don't")
    assert token_shapes(tok) == [("don", True), ("'", False), ("t", True)]


def test_tokenize_rejects_unsupported():
    with pytest.raises(UnsupportedCharacter) as exc:
        tokenize("abéc")
    assert exc.value.index == 2
    assert exc.value.codepoint == 0xE9


def test_every_index_in_exactly_one_token():
    tok = tokenize("The quick, brown fox; 42 jumps!")
    seen = []
    for t in tok.tokens:
        if isinstance(t, Word):
            seen.extend(range(t.start, t.start + t.length))
        else:
            seen.append(t.index)
    assert seen == list(range(len(tok.chars)))


@given(SUPPORTED)
def test_round_trip(text):
    assert detokenize(tokenize(text)) == text


@given(SUPPORTED)
def test_tokenize_idempotent(text):
    once = tokenize(text)
    again = tokenize(detokenize(once))
    assert once == again


def test_load_dictionary_dedupes_and_lowercases():
    d = load_dictionary(["Cat", "cat", "DOG"])
    assert sorted(d.entries) == ["cat", "dog"]
    assert d.freq("cat") == 1


def test_load_dictionary_inline_counts():
    d = load_dictionary(["the 1000", "cat 5"])
    assert d.freq("the") == 1000
    assert d.freq("cat") == 5


def test_load_dictionary_separate_frequency_source():
    d = load_dictionary(["summer", "simmer"], ["summer 90", "missing 7"])
    assert d.freq("summer") == 90
    assert d.freq("simmer") == 1


def test_load_dictionary_empty_raises():
    with pytest.raises(EmptyDictionary):
        load_dictionary([])


def test_dictionary_lookup_case_insensitive():
    d = load_dictionary(["Summer"])
    assert "SUMMER" in d and "summer" in d and "winter" not in d


def test_load_corpus_skips_unsupported_lines(tmp_path, caplog):
    path = tmp_path / "c.txt"
    path.write_text("good line one\nbad line é\ngood line two\n",
                    encoding="utf-8")
    with caplog.at_level("WARNING"):
        sentences = load_corpus(path)
    assert sentences == ["good line one", "good line two"]
    assert any("skipping corpus line 2" in r.message for r in caplog.records)


def test_load_squad_contexts(tmp_path):
    path = tmp_path / "squad.json"
    path.write_text(
        '{"data": [{"paragraphs": [{"context": '
        '"First sentence here. Second one! Third?"}]}]}', encoding="utf-8")
    assert load_squad_contexts(path) == [
        "First sentence here.", "Second one!", "Third?"]


def test_bundled_assets_load():
    d = bundled_dictionary()
    assert len(d) > 5000
    for w in ("summer", "simmer", "caramel", "the", "cat"):
        assert w in d
    assert "steven" not in d and "stevens" not in d
    corpus = bundled_corpus()
    assert len(corpus) == 500
    assert all(len(s.split()) >= 20 for s in corpus)
    assert all(all(c in string.printable[:-5] for c in s) for s in corpus)
