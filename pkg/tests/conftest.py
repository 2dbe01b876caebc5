import json
from pathlib import Path

import pytest

from fuzzygdm.session import Engines

ROOT = Path(__file__).resolve().parents[1]
FIXTURE_SESSION = ROOT / "fixtures" / "restaurant.session"
ORACLE_CORPUS = Path(__file__).parent / "data" / "sentiment_oracle_corpus.tsv"


@pytest.fixture(scope="session")
def engines():
    return Engines.load()


@pytest.fixture()
def restaurant_doc():
    with open(FIXTURE_SESSION, encoding="utf-8") as fh:
        return json.load(fh)


def load_oracle_corpus():
    rows = []
    with open(ORACLE_CORPUS, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            compound, sentence = line.split("\t", 1)
            rows.append((float(compound), sentence))
    return rows
