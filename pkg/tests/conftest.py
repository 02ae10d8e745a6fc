import os

import pytest

from edc import load_stopwords, load_jsonl
from edc.synthetic import synthetic_corpus

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
FIXTURE_JSONL = os.path.join(DATA_DIR, "synthetic_corpus.jsonl")
CLOTHO_SAMPLE_CSV = os.path.join(DATA_DIR, "clotho_sample.csv")


@pytest.fixture(scope="session")
def stopwords():
    return load_stopwords()


@pytest.fixture(scope="session")
def fixture_corpus():
    """The shipped synthetic corpus (2000 captions)."""
    return load_jsonl(FIXTURE_JSONL)


@pytest.fixture(scope="session")
def small_corpus():
    """A fresh 1000-caption synthetic corpus for module-level statistics tests."""
    return synthetic_corpus(n_captions=1000)
