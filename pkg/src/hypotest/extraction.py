"""Signed relation extraction from sentences.

Every sentence containing two or more known entities yields one candidate
relation per entity pair. Sentence polarity is the parity of negation-word
("complementary word") matches: an even count asserts the relation, an odd
count opposes it. The connecting predicate is the first relation verb
between the pair, stemmed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import Document, Sentence, tokenize
from .lexicon import Lexicon, Mention
from .stemmer import stem

__all__ = [
    "Polarity",
    "Relation",
    "NegationLexicon",
    "VerbLexicon",
    "FALLBACK_PREDICATE",
    "classify_polarity",
    "extract_predicate",
    "extract_relations",
]

FALLBACK_PREDICATE = "relate"

_DATA_DIR = Path(__file__).parent / "data"


class Polarity(enum.IntEnum):
    """Sign of a relation claim: +1 supports it, -1 opposes it."""

    POSITIVE = 1
    NEGATIVE = -1


@dataclass(frozen=True)
class Relation:
    """Signed, undirected entity pair with document provenance.

    ``subject``/``object`` are stored in canonical (lexicographic) order;
    the deduplication key is (doc_id, pair, predicate, polarity), so a
    relation cited many times in one paper is stored once.
    """

    subject: str
    object: str
    predicate: str
    polarity: Polarity
    doc_id: str
    sentence_index: int
    evidence: str

    def __post_init__(self) -> None:
        if self.subject == self.object:
            raise ValueError("relation endpoints must differ")
        if not self.predicate:
            raise ValueError("relation predicate must be non-empty")
        a, b = self.subject, self.object
        if a > b:
            object.__setattr__(self, "subject", b)
            object.__setattr__(self, "object", a)
        object.__setattr__(self, "polarity", Polarity(self.polarity))

    @property
    def pair(self) -> tuple[str, str]:
        return (self.subject, self.object)

    def key(self) -> tuple[str, str, str, str, int]:
        return (self.doc_id, self.subject, self.object, self.predicate,
                int(self.polarity))

    def other(self, entity_id: str) -> str:
        """The endpoint opposite ``entity_id``."""
        return self.object if entity_id == self.subject else self.subject

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "object": self.object,
            "predicate": self.predicate,
            "polarity": int(self.polarity),
            "doc_id": self.doc_id,
            "sentence_index": self.sentence_index,
            "evidence": self.evidence,
        }

    @classmethod
    def from_json(cls, record: dict) -> "Relation":
        return cls(
            subject=record["subject"],
            object=record["object"],
            predicate=record["predicate"],
            polarity=Polarity(record["polarity"]),
            doc_id=record["doc_id"],
            sentence_index=record["sentence_index"],
            evidence=record.get("evidence", ""),
        )


def _read_wordlist(path: str | Path) -> list[str]:
    entries = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            entries.append(line)
    return entries


class NegationLexicon:
    """Negation tokens and short phrases; phrases match before single tokens."""

    def __init__(self, entries: Iterable[str]):
        self.entries = tuple(entries)
        phrases = [tokenize(e) for e in self.entries]
        phrases = [p for p in phrases if p]
        if not phrases:
            raise ValueError("negation lexicon must be non-empty")
        # longest first so "not evident" consumes its tokens as one match
        self._phrases = tuple(sorted(set(phrases), key=lambda p: (-len(p), p)))

    @classmethod
    def from_file(cls, path: str | Path) -> "NegationLexicon":
        return cls(_read_wordlist(path))

    @classmethod
    def default(cls) -> "NegationLexicon":
        return cls.from_file(_DATA_DIR / "negation_words.txt")

    def count_matches(self, tokens: Sequence[str],
                      exclude: Sequence[bool] | None = None) -> int:
        """Non-overlapping matches in a token list, phrases first.

        ``exclude`` marks token positions (entity mentions) that never
        count toward parity.
        """
        count = 0
        i = 0
        n = len(tokens)
        while i < n:
            if exclude is not None and exclude[i]:
                i += 1
                continue
            matched = False
            for phrase in self._phrases:
                end = i + len(phrase)
                if end > n or tuple(tokens[i:end]) != phrase:
                    continue
                if exclude is not None and any(exclude[i:end]):
                    continue
                count += 1
                i = end
                matched = True
                break
            if not matched:
                i += 1
        return count


class VerbLexicon:
    """Closed list of relation-verb stems used as predicate candidates."""

    def __init__(self, verbs: Iterable[str]):
        self.stems = frozenset(stem(v.lower()) for v in verbs)
        if not self.stems:
            raise ValueError("verb lexicon must be non-empty")

    @classmethod
    def from_file(cls, path: str | Path) -> "VerbLexicon":
        return cls(_read_wordlist(path))

    @classmethod
    def default(cls) -> "VerbLexicon":
        return cls.from_file(_DATA_DIR / "relation_verbs.txt")

    def candidate_stem(self, token: str) -> str | None:
        """The token's stem when it is a known relation verb, else None."""
        s = stem(token)
        return s if s in self.stems else None


def _exclusion_mask(length: int, spans: Iterable[tuple[int, int]]) -> list[bool]:
    mask = [False] * length
    for start, end in spans:
        for i in range(max(start, 0), min(end, length)):
            mask[i] = True
    return mask


def classify_polarity(sentence: Sentence, negation: NegationLexicon,
                      exclude_spans: Iterable[tuple[int, int]] = ()) -> Polarity:
    """Sentence polarity by negation parity: even count -> +1, odd -> -1.

    ``exclude_spans`` are token spans of entity mentions; negation words
    inside an alias (e.g. "NO synthase") do not count.
    """
    mask = _exclusion_mask(len(sentence.tokens), exclude_spans)
    count = negation.count_matches(sentence.tokens, mask)
    return Polarity.POSITIVE if count % 2 == 0 else Polarity.NEGATIVE


def extract_predicate(sentence: Sentence, first: Mention, second: Mention,
                      verbs: VerbLexicon) -> str:
    """Stemmed predicate connecting two mentions of one sentence.

    Takes the first relation verb strictly between the spans; failing
    that, the first one after the later span; failing that, the fallback
    predicate "relate".
    """
    if first.start > second.start:
        first, second = second, first
    for token in sentence.tokens[first.end:second.start]:
        candidate = verbs.candidate_stem(token)
        if candidate is not None:
            return candidate
    for token in sentence.tokens[second.end:]:
        candidate = verbs.candidate_stem(token)
        if candidate is not None:
            return candidate
    return FALLBACK_PREDICATE


def extract_relations(doc: Document, lexicon: Lexicon,
                      negation: NegationLexicon,
                      verbs: VerbLexicon) -> list[Relation]:
    """All deduplicated relations of one document.

    Sentences with fewer than two distinct entities contribute nothing.
    Every unordered pair of distinct entities in a sentence becomes a
    candidate carrying the sentence's polarity and the pair's predicate;
    candidates collapse onto the (doc, pair, predicate, polarity) key.
    """
    seen: set[tuple] = set()
    relations: list[Relation] = []
    for sentence in doc.sentences:
        mentions = lexicon.match_entities(sentence)
        first_mention: dict[str, Mention] = {}
        for mention in mentions:
            first_mention.setdefault(mention.entity_id, mention)
        if len(first_mention) < 2:
            continue
        spans = [(m.start, m.end) for m in mentions]
        polarity = classify_polarity(sentence, negation, exclude_spans=spans)
        ordered = sorted(first_mention.values(), key=lambda m: m.start)
        for i, m1 in enumerate(ordered):
            for m2 in ordered[i + 1:]:
                relation = Relation(
                    subject=m1.entity_id,
                    object=m2.entity_id,
                    predicate=extract_predicate(sentence, m1, m2, verbs),
                    polarity=polarity,
                    doc_id=doc.doc_id,
                    sentence_index=sentence.index,
                    evidence=sentence.text,
                )
                if relation.key() not in seen:
                    seen.add(relation.key())
                    relations.append(relation)
    return relations
