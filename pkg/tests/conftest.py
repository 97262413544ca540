from __future__ import annotations

import json
from pathlib import Path

import pytest

from hypotest.corpus import Sentence, split_sentences
from hypotest.extraction import NegationLexicon, VerbLexicon
from hypotest.lexicon import bundled_lexicon_path, load_lexicon

DATA_DIR = Path(__file__).parent / "data"
BUNDLED_DATA_DIR = Path(bundled_lexicon_path()).parent
MINI_CORPUS = BUNDLED_DATA_DIR / "mini_corpus.jsonl"
GOLD_RELATIONS = DATA_DIR / "gold_relations.jsonl"


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(bundled_lexicon_path())


@pytest.fixture(scope="session")
def negation():
    return NegationLexicon.default()


@pytest.fixture(scope="session")
def verbs():
    return VerbLexicon.default()


def sent(text: str) -> Sentence:
    """First sentence of a text, or an empty one."""
    sentences = split_sentences(text)
    return sentences[0] if sentences else Sentence(index=0, text="", tokens=())


def synthetic_carvedilol_corpus() -> list[str]:
    """25 one-sentence JSONL docs, 18 asserting (carvedilol, cause, weight_gain, -1).

    This is the worked-example corpus: test --expected 15 must observe o=18.
    """
    supporting = []
    for i in range(18):
        if i % 2 == 0:
            text = "Carvedilol not causes Weight Gain."
        else:
            text = "It is not evident that Carvedilol causes Weight Gain."
        supporting.append(text)
    others = [
        "Carvedilol causes Weight Gain.",  # opposing claim: not support
        "Aspirin reduces inflammation.",
        "Metformin reduces blood glucose.",
        "Leptin regulates obesity.",
        "Insulin regulates blood glucose.",
        "TNF triggers inflammation.",
        "Penicillin does not cure malaria.",
    ]
    return [
        json.dumps({"id": f"s{i:02d}", "title": f"synthetic paper {i}", "text": text})
        for i, text in enumerate(supporting + others, start=1)
    ]


@pytest.fixture
def carvedilol_corpus_file(tmp_path: Path) -> Path:
    path = tmp_path / "synthetic_corpus.jsonl"
    path.write_text("\n".join(synthetic_carvedilol_corpus()) + "\n", encoding="utf-8")
    return path
