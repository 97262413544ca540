import json
import random

import pytest

from hypotest.corpus import Sentence, tokenize
from hypotest.lexicon import (AmbiguousAliasError, Entity, Lexicon,
                              LexiconError, load_lexicon)

from .conftest import sent


def brute_force_mentions(tokens, alias_index):
    """Oracle: enumerate every alias span, then apply longest/leftmost.

    Among overlapping candidates the longest token span wins, ties broken
    by leftmost start; chosen spans never overlap.
    """
    candidates = []
    for start in range(len(tokens)):
        for end in range(start + 1, len(tokens) + 1):
            entity_id = alias_index.get(tuple(tokens[start:end]))
            if entity_id is not None:
                candidates.append((start, end, entity_id))
    chosen = []
    for start, end, entity_id in sorted(candidates,
                                        key=lambda c: (-(c[1] - c[0]), c[0])):
        if all(end <= s or e <= start for s, e, _ in chosen):
            chosen.append((start, end, entity_id))
    return sorted(chosen)


def alias_index_of(lexicon):
    index = {}
    for entity in lexicon:
        for alias in entity.aliases:
            index[tokenize(alias)] = entity.entity_id
    return index


def test_known_aliases_resolve(lexicon):
    assert lexicon.resolve("melanocortin4 receptor") == "mc4r"
    assert lexicon.resolve("MC4R") == "mc4r"
    assert lexicon.resolve("Bacillus Calmette-Gurin") == "bcg"
    assert lexicon.resolve("WEIGHT GAIN") == lexicon.resolve("weight gain")


def test_empty_lexicon_matches_nothing():
    lexicon = Lexicon()
    assert lexicon.match_entities(sent("Carvedilol not causes Weight Gain")) == []


def test_ambiguous_alias_fails_load(tmp_path):
    path = tmp_path / "lex.jsonl"
    path.write_text(
        json.dumps({"id": "tp53", "type": "gene", "aliases": ["p53"]}) + "\n" +
        json.dumps({"id": "p53_protein", "type": "protein", "aliases": ["p53"]}) + "\n")
    with pytest.raises(AmbiguousAliasError, match="p53"):
        load_lexicon(path)


def test_duplicate_entity_id_fails_load(tmp_path):
    path = tmp_path / "lex.jsonl"
    path.write_text(
        json.dumps({"id": "x", "type": "gene", "aliases": ["XA"]}) + "\n" +
        json.dumps({"id": "x", "type": "gene", "aliases": ["XB"]}) + "\n")
    with pytest.raises(LexiconError, match="duplicate"):
        load_lexicon(path)


def test_missing_file():
    with pytest.raises(LexiconError, match="not found"):
        load_lexicon("/nonexistent/lexicon.jsonl")


def test_match_entities_two_entity_sentence(lexicon):
    mentions = lexicon.match_entities(sent("Carvedilol not causes Weight Gain"))
    assert [(m.entity_id, m.start, m.end) for m in mentions] == [
        ("carvedilol", 0, 1), ("weight_gain", 3, 5)]
    assert len({m.entity_id for m in mentions}) == 2


def test_match_entities_no_hits(lexicon):
    assert lexicon.match_entities(sent("The quick brown fox jumps.")) == []


def test_longest_match_beats_one_token_alias(lexicon):
    mentions = lexicon.match_entities(
        sent("Melanocortin4 receptor leads to severe weight gain"))
    assert [(m.entity_id, m.start, m.end) for m in mentions] == [
        ("mc4r", 0, 2), ("weight_gain", 5, 7)]


def test_matches_are_token_sequences_not_substrings():
    lexicon = Lexicon()
    lexicon.add(Entity("gain", "gain", "other", ("gain",)))
    mentions = lexicon.match_entities(sent("Try again and again"))
    assert mentions == []


def test_case_insensitive_resolution(lexicon):
    upper = lexicon.match_entities(sent("WEIGHT GAIN was seen"))
    lower = lexicon.match_entities(sent("weight gain was seen"))
    assert [m.entity_id for m in upper] == [m.entity_id for m in lower]


def test_mentions_never_overlap_and_match_oracle(lexicon):
    index = alias_index_of(lexicon)
    texts = [
        "Melanocortin4 receptor leads to severe weight gain",
        "NO synthase produces nitric oxide in endothelium",
        "High LDL cholesterol increases stroke risk",
        "Bacillus Calmette-Gurin cures Buruli ulcer and protects against tuberculosis",
        "Carvedilol treats hypertension and heart failure without weight gain",
        "Low adiponectin is associated with type 2 diabetes",
    ]
    for text in texts:
        sentence = sent(text)
        mentions = lexicon.match_entities(sentence)
        spans = [(m.start, m.end) for m in mentions]
        for (s1, e1) in spans:
            for (s2, e2) in spans:
                assert (s1, e1) == (s2, e2) or e1 <= s2 or e2 <= s1
        got = sorted((m.start, m.end, m.entity_id) for m in mentions)
        assert got == brute_force_mentions(sentence.tokens, index), text


def test_random_token_streams_match_oracle(lexicon):
    rng = random.Random(42)
    vocab = ["carvedilol", "weight", "gain", "melanocortin4", "receptor",
             "mc4r", "nitric", "oxide", "synthase", "no", "type", "2",
             "diabetes", "blood", "glucose", "the", "and", "causes"]
    index = alias_index_of(lexicon)
    for _ in range(300):
        tokens = tuple(rng.choices(vocab, k=rng.randint(0, 12)))
        sentence = Sentence(index=0, text=" ".join(tokens), tokens=tokens)
        got = sorted((m.start, m.end, m.entity_id)
                     for m in lexicon.match_entities(sentence))
        assert got == brute_force_mentions(tokens, index)


def test_surface_matches_an_alias(lexicon):
    sentence = sent("Low adiponectin is associated with type 2 diabetes")
    mentions = lexicon.match_entities(sentence)
    assert mentions
    for mention in mentions:
        entity = lexicon.get(mention.entity_id)
        # case-insensitive equality, modulo the tokenizer's punctuation folding
        assert any(tokenize(mention.surface) == tokenize(alias)
                   for alias in entity.aliases), mention


def test_search_for_autocomplete(lexicon):
    hits = lexicon.search("weight")
    assert any(e.entity_id == "weight_gain" for e in hits)
    assert lexicon.search("") == []
    assert lexicon.search("zzzznothing") == []
