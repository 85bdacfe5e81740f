"""Text ingestion, tokenization, and dictionary management.

Text is segmented into maximal alphabetic runs (words) and single-character
non-word tokens (spaces, punctuation, digits). Only the 7-bit printable
character set plus newline is supported.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Union

from .errors import EmptyDictionary, UnsupportedCharacter

logger = logging.getLogger(__name__)

# Codepoints 0x20..0x7E plus newline.
SUPPORTED_CHARS = frozenset(chr(c) for c in range(0x20, 0x7F)) | {"\n"}

_WORD_RUN = re.compile(r"[A-Za-z]+")


@dataclass(frozen=True)
class Word:
    """Maximal alphabetic run starting at `start`."""

    start: int
    text: str

    @property
    def length(self) -> int:
        return len(self.text)


@dataclass(frozen=True)
class NonWord:
    """Single non-alphabetic character (space, punctuation, digit)."""

    index: int
    char: str


Token = Union[Word, NonWord]


@dataclass(frozen=True)
class TokenizedText:
    """A character sequence with its word/non-word segmentation."""

    chars: str
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.chars)

    def words(self) -> list[Word]:
        return [t for t in self.tokens if isinstance(t, Word)]


def validate_text(text: str) -> None:
    """Raise UnsupportedCharacter for the first character outside the supported set."""
    for i, ch in enumerate(text):
        if ch not in SUPPORTED_CHARS:
            raise UnsupportedCharacter(i, ord(ch))


def tokenize(text: str) -> TokenizedText:
    """Segment `text` into Word and NonWord tokens covering every character."""
    validate_text(text)
    tokens: list[Token] = []
    pos = 0
    for m in _WORD_RUN.finditer(text):
        for i in range(pos, m.start()):
            tokens.append(NonWord(i, text[i]))
        tokens.append(Word(m.start(), m.group()))
        pos = m.end()
    for i in range(pos, len(text)):
        tokens.append(NonWord(i, text[i]))
    return TokenizedText(chars=text, tokens=tuple(tokens))


def detokenize(tok: TokenizedText) -> str:
    """Reassemble the original character sequence from tokens."""
    parts = []
    for t in tok.tokens:
        parts.append(t.text if isinstance(t, Word) else t.char)
    return "".join(parts)


class Dictionary:
    """Immutable lowercase word set with unigram frequencies.

    Matching is case-insensitive; every known word has a frequency
    (defaulting to 1).
    """

    def __init__(self, freq: dict[str, int]):
        if not freq:
            raise EmptyDictionary("no dictionary entries")
        self._freq = dict(freq)
        self._entries = frozenset(self._freq)

    @property
    def entries(self) -> frozenset[str]:
        return self._entries

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def freq(self, word: str) -> int:
        return self._freq.get(word.lower(), 0)


def _iter_lines(source: Union[str, Path, Iterable[str]]) -> Iterable[str]:
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            yield from fh
    else:
        yield from source


def load_dictionary(
    words: Union[str, Path, Iterable[str]],
    frequencies: Union[str, Path, Iterable[str], None] = None,
) -> Dictionary:
    """Build a Dictionary from a word list and an optional frequency source.

    Each word-list line is `word` or `word<space>count`; a separate frequency
    source uses `word<space>count` lines. Words are lowercased and
    deduplicated; missing frequencies default to 1.
    """
    freq: dict[str, int] = {}
    for line in _iter_lines(words):
        parts = line.split()
        if not parts:
            continue
        word = parts[0].lower()
        count = int(parts[1]) if len(parts) > 1 else 1
        freq[word] = max(freq.get(word, 1), count)
    if frequencies is not None:
        for line in _iter_lines(frequencies):
            parts = line.split()
            if len(parts) >= 2 and parts[0].lower() in freq:
                freq[parts[0].lower()] = int(parts[1])
    if not freq:
        raise EmptyDictionary("no dictionary entries after parsing")
    return Dictionary(freq)


def load_corpus(path: Union[str, Path]) -> list[str]:
    """Read a one-sentence-per-line corpus, skipping lines with unsupported characters."""
    sentences = []
    skipped = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                validate_text(line)
            except UnsupportedCharacter as exc:
                skipped += 1
                logger.warning("skipping corpus line %d: %s", lineno, exc)
                continue
            sentences.append(line)
    if skipped:
        logger.warning("skipped %d corpus lines with unsupported characters", skipped)
    return sentences


_SENTENCE_SPLIT = re.compile(r"(?<=[.!?])\s+")


def load_squad_contexts(path: Union[str, Path]) -> list[str]:
    """Extract sentences from a SQuAD-style JSON file (`data[].paragraphs[].context`)."""
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    sentences = []
    for article in payload.get("data", []):
        for paragraph in article.get("paragraphs", []):
            context = paragraph.get("context", "")
            for sent in _SENTENCE_SPLIT.split(context):
                sent = sent.strip()
                if sent:
                    sentences.append(sent)
    return sentences


def bundled_dictionary() -> Dictionary:
    """Load the dictionary shipped with the package."""
    ref = resources.files("punctext.assets").joinpath("dictionary.txt")
    return load_dictionary(ref.read_text(encoding="utf-8").splitlines())


def bundled_corpus() -> list[str]:
    """Load the sample sentence corpus shipped with the package."""
    ref = resources.files("punctext.assets").joinpath("corpus.txt")
    sentences = []
    for line in ref.read_text(encoding="utf-8").splitlines():
        line = line.rstrip("\n")
        if line:
            validate_text(line)
            sentences.append(line)
    return sentences
