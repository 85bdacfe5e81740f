import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from punctext.corpus import Dictionary, bundled_corpus, bundled_dictionary
from punctext.importance import ImportanceScorer, ScoreParams
from punctext.spelling import WordIndex

from oracles import BruteForceLookup


@pytest.fixture(scope="session")
def dictionary() -> Dictionary:
    return bundled_dictionary()


@pytest.fixture(scope="session")
def index(dictionary) -> WordIndex:
    return WordIndex(dictionary)


@pytest.fixture(scope="session")
def brute(dictionary) -> BruteForceLookup:
    return BruteForceLookup(dictionary)


@pytest.fixture(scope="session")
def params() -> ScoreParams:
    return ScoreParams()


@pytest.fixture(scope="session")
def scorer(index, params) -> ImportanceScorer:
    return ImportanceScorer(index, params)


@pytest.fixture(scope="session")
def corpus() -> list[str]:
    return bundled_corpus()


@pytest.fixture()
def tiny_dictionary() -> Dictionary:
    return Dictionary({
        "a": 500, "i": 400, "b": 1, "the": 1000, "cat": 120, "cot": 5,
        "cut": 80, "coat": 30, "cast": 25, "care": 60, "card": 40,
        "cart": 20, "summer": 90, "simmer": 8,
    })
