import json
import sys
from pathlib import Path

import pytest

_SHIM_DATA = Path(__file__).parent / "data"
_FIXTURE_JSONL = Path(__file__).parents[2] / "tests" / "data" / "synthetic_corpus.jsonl"


@pytest.fixture(scope="session")
def shim_data_dir():
    return _SHIM_DATA


@pytest.fixture(scope="session")
def fixture_corpus_path():
    return _FIXTURE_JSONL


@pytest.fixture(scope="session")
def server_command():
    # run the server from the current interpreter so the shim talks to
    # the same core package the rest of the suite tests
    return [sys.executable, "-m", "edc"]


@pytest.fixture(scope="session")
def fixture_records():
    records = []
    with open(_FIXTURE_JSONL, encoding="utf-8") as fh:
        for ordinal, line in enumerate(fh):
            obj = json.loads(line)
            records.append((obj["id"], ordinal, obj["caption"]))
    return records
