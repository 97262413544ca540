"""Hypothesis parsing and rendering.

A hypothesis sentence is normalized with the same machinery used on the
corpus: entity matching, negation parity, predicate stemming. Two
paraphrases with identical entities, predicate stem and negation parity
therefore collapse to the same normal form ("Carvedilol not causes Weight
Gain" equals "It is not evident that Carvedilol causes Weight Gain").
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .corpus import split_sentences
from .extraction import (NegationLexicon, Polarity, VerbLexicon,
                         classify_polarity, extract_predicate)
from .lexicon import Lexicon
from .stemmer import stem

__all__ = [
    "Hypothesis",
    "HypothesisError",
    "UnrecognizedEntityError",
    "AmbiguousHypothesisError",
    "parse_hypothesis",
    "render_hypothesis_text",
    "hypothesis_from_selection",
]


class HypothesisError(ValueError):
    """Hypothesis text could not be normalized."""

    def __init__(self, message: str, matched: tuple[str, ...] = ()):
        super().__init__(message)
        self.matched = matched


class UnrecognizedEntityError(HypothesisError):
    """Fewer than two known entities in the hypothesis."""


class AmbiguousHypothesisError(HypothesisError):
    """More than two distinct entities; only simple hypotheses are handled."""


@dataclass(frozen=True)
class Hypothesis:
    """Normalized query: two entities, a predicate stem, a polarity.

    ``subject`` is the leftmost mention; since relations are stored
    undirected the order only labels rendered text. ``source_text`` is
    excluded from equality so paraphrases compare equal.
    """

    subject: str
    object: str
    predicate: str
    polarity: Polarity
    source_text: str = field(compare=False, default="")

    def __post_init__(self) -> None:
        if self.subject == self.object:
            raise ValueError("hypothesis entities must differ")
        if not self.predicate:
            raise ValueError("hypothesis predicate must be non-empty")
        object.__setattr__(self, "polarity", Polarity(self.polarity))

    @property
    def pair(self) -> tuple[str, str]:
        """Canonically ordered entity pair, matching stored relations."""
        a, b = self.subject, self.object
        return (a, b) if a <= b else (b, a)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "object": self.object,
            "predicate": self.predicate,
            "polarity": int(self.polarity),
            "text": self.source_text,
        }


def parse_hypothesis(text: str, lexicon: Lexicon,
                     negation: NegationLexicon,
                     verbs: VerbLexicon) -> Hypothesis:
    """Normalize one hypothesis sentence.

    Requires exactly two distinct known entities. Raises
    :class:`UnrecognizedEntityError` (listing what was matched) when fewer
    are found, :class:`AmbiguousHypothesisError` when more.
    """
    sentences = split_sentences(text)
    if not sentences:
        raise UnrecognizedEntityError("empty hypothesis text")
    sentence = sentences[0]
    mentions = lexicon.match_entities(sentence)
    distinct: dict[str, object] = {}
    for mention in mentions:
        distinct.setdefault(mention.entity_id, mention)
    matched = tuple(distinct)
    if len(distinct) < 2:
        raise UnrecognizedEntityError(
            f"hypothesis needs two known entities, matched {list(matched)!r}",
            matched=matched)
    if len(distinct) > 2:
        raise AmbiguousHypothesisError(
            f"hypothesis must relate exactly two entities, matched {list(matched)!r}",
            matched=matched)
    first, second = sorted(distinct.values(), key=lambda m: m.start)  # type: ignore[arg-type]
    spans = [(m.start, m.end) for m in mentions]
    polarity = classify_polarity(sentence, negation, exclude_spans=spans)
    predicate = extract_predicate(sentence, first, second, verbs)
    return Hypothesis(
        subject=first.entity_id,
        object=second.entity_id,
        predicate=predicate,
        polarity=polarity,
        source_text=text,
    )


def _inflect_third_person(verb_stem: str) -> str:
    if verb_stem.endswith(("s", "sh", "ch", "x", "z", "o")):
        return verb_stem + "es"
    if verb_stem.endswith("y") and len(verb_stem) > 1 and verb_stem[-2] not in "aeiou":
        return verb_stem[:-1] + "ies"
    return verb_stem + "s"


def render_hypothesis_text(subject_name: str, object_name: str,
                           predicate: str, negated: bool) -> str:
    """Template a hypothesis sentence: ``<subject> [not] <predicate>s <object>``."""
    verb = _inflect_third_person(stem(predicate.strip().lower()))
    negation = "not " if negated else ""
    return f"{subject_name} {negation}{verb} {object_name}"


def hypothesis_from_selection(subject: str, object_: str, predicate: str,
                              negated: bool, lexicon: Lexicon,
                              negation: NegationLexicon,
                              verbs: VerbLexicon) -> tuple[Hypothesis, str]:
    """Build a hypothesis from a graphical selection (node pair or edge).

    Renders the textual form and re-parses it, so the returned hypothesis
    is exactly what the text route would produce (round-trip contract).
    The predicate should come from the relation-verb list; anything else
    parses back to the fallback predicate.
    """
    subject_id = lexicon.resolve(subject)
    object_id = lexicon.resolve(object_)
    if subject_id is None:
        raise KeyError(subject)
    if object_id is None:
        raise KeyError(object_)
    if subject_id == object_id:
        raise ValueError("selection must name two different entities")
    subject_entity = lexicon.get(subject_id)
    object_entity = lexicon.get(object_id)
    assert subject_entity is not None and object_entity is not None
    text = render_hypothesis_text(subject_entity.canonical_name,
                                  object_entity.canonical_name,
                                  predicate, negated)
    hypothesis = parse_hypothesis(text, lexicon, negation, verbs)
    if {hypothesis.subject, hypothesis.object} != {subject_id, object_id}:
        raise HypothesisError(
            f"rendered text {text!r} does not parse back to the selected pair")
    return hypothesis, text
