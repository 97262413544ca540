"""Pipeline wiring: lexicon + corpus + extraction + store, shared by CLI and API.

The engine owns the persistent state under one data directory
(``corpus.jsonl`` + ``relations.jsonl``) and serializes all mutations, so
a hypothesis test running concurrently with ingestion sees either the
pre- or post-ingestion snapshot, never a partial one.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .corpus import Corpus, CorpusError, iter_records
from .extraction import NegationLexicon, VerbLexicon, extract_relations
from .hypothesis import Hypothesis, hypothesis_from_selection
from .lexicon import Entity, Lexicon, bundled_lexicon_path, load_lexicon
from .network import SecondaryNetwork, build_secondary_network
from .stats import TestResult, evaluate_hypothesis, test_hypothesis
from .store import RelationStore

__all__ = ["Engine", "IngestSummary", "UnknownEntityError"]


class UnknownEntityError(KeyError):
    """Entity name not present in the lexicon."""

    def __init__(self, name: str):
        super().__init__(name)
        self.name = name


@dataclass(frozen=True)
class IngestSummary:
    ingested: int
    relations_added: int

    def to_json(self) -> dict:
        return {"ingested": self.ingested, "relations_added": self.relations_added}


class _ReadWriteLock:
    """Many concurrent readers, one exclusive writer (writer waits them out)."""

    def __init__(self) -> None:
        self._readers = 0
        self._readers_lock = threading.Lock()
        self._writer_lock = threading.Lock()

    @contextmanager
    def read(self) -> Iterator[None]:
        with self._readers_lock:
            self._readers += 1
            if self._readers == 1:
                self._writer_lock.acquire()
        try:
            yield
        finally:
            with self._readers_lock:
                self._readers -= 1
                if self._readers == 0:
                    self._writer_lock.release()

    @contextmanager
    def write(self) -> Iterator[None]:
        with self._writer_lock:
            yield


class Engine:
    """One corpus, one lexicon, one relation store, one extraction config."""

    def __init__(self, data_dir: str | Path,
                 lexicon_path: str | Path | None = None,
                 negation_path: str | Path | None = None,
                 verbs_path: str | Path | None = None):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.lexicon: Lexicon = load_lexicon(lexicon_path or bundled_lexicon_path())
        self.negation = (NegationLexicon.from_file(negation_path)
                         if negation_path else NegationLexicon.default())
        self.verbs = (VerbLexicon.from_file(verbs_path)
                      if verbs_path else VerbLexicon.default())
        self.corpus = Corpus(self.data_dir / "corpus.jsonl")
        self.store = RelationStore(self.data_dir / "relations.jsonl")
        for doc_id in self.corpus.doc_ids():
            self.store.register_document(doc_id)
        # whole-batch exclusivity: readers see pre- or post-ingestion state
        self._state_lock = _ReadWriteLock()

    # ------------------------------------------------------------------
    # ingestion
    # ------------------------------------------------------------------

    def ingest_records(self, records: Iterable[dict]) -> IngestSummary:
        """Store documents, run extraction, save deduplicated relations.

        A record whose id already exists with identical content is a
        no-op (idempotent re-ingestion); the same id with different
        content is an error.
        """
        ingested = 0
        relations_added = 0
        with self._state_lock.write():
            for index, record in enumerate(records):
                doc_id = record.get("id")
                title = record.get("title", "")
                text = record.get("text", "")
                if not isinstance(text, str) or not text.strip():
                    raise CorpusError(f"record {index}: missing or empty 'text'")
                if doc_id is not None and doc_id in self.corpus:
                    existing = self.corpus.get(doc_id)
                    if existing.text != text:
                        raise CorpusError(
                            f"record {index}: doc_id {doc_id!r} already exists "
                            "with different content")
                    ingested += 1
                    continue
                doc_id = self.corpus.add_document(title, text, doc_id=doc_id)
                self.store.register_document(doc_id)
                doc = self.corpus.get(doc_id)
                for relation in extract_relations(doc, self.lexicon,
                                                  self.negation, self.verbs):
                    if self.store.save_relation(relation):
                        relations_added += 1
                ingested += 1
        return IngestSummary(ingested=ingested, relations_added=relations_added)

    def ingest_file(self, path: str | Path) -> IngestSummary:
        path = Path(path)
        if not path.exists():
            raise CorpusError(f"corpus file not found: {path}")
        with path.open("r", encoding="utf-8") as fh:
            return self.ingest_records(iter_records(fh))

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def resolve_entity(self, name: str) -> Entity:
        entity_id = self.lexicon.resolve(name)
        if entity_id is None:
            raise UnknownEntityError(name)
        entity = self.lexicon.get(entity_id)
        assert entity is not None
        return entity

    def test(self, text: str, expected: float, alpha: float = 0.05,
             mode: str = "strict", match_predicate: bool = False) -> TestResult:
        with self._state_lock.read():
            return test_hypothesis(
                text, expected, store=self.store, corpus=self.corpus,
                lexicon=self.lexicon, negation=self.negation, verbs=self.verbs,
                mode=mode, match_predicate=match_predicate, alpha=alpha)

    def test_selection(self, subject: str, object_: str, predicate: str,
                       negated: bool, expected: float, alpha: float = 0.05,
                       mode: str = "strict", match_predicate: bool = False,
                       ) -> tuple[TestResult, str]:
        """Graphical route: render the selection to text, then test it."""
        try:
            hypothesis, text = hypothesis_from_selection(
                subject, object_, predicate, negated,
                self.lexicon, self.negation, self.verbs)
        except KeyError as exc:
            raise UnknownEntityError(str(exc.args[0])) from exc
        with self._state_lock.read():
            result = evaluate_hypothesis(
                hypothesis, expected, store=self.store, corpus=self.corpus,
                mode=mode, match_predicate=match_predicate, alpha=alpha)
        return result, text

    def network(self, entities: Iterable[str], max_hops: int | None = 2,
                positive_only: bool = False) -> SecondaryNetwork:
        seeds = [self.resolve_entity(name).entity_id for name in entities]
        with self._state_lock.read():
            return build_secondary_network(
                self.store, seeds, max_hops=max_hops, lexicon=self.lexicon,
                positive_only=positive_only)

    def network_for(self, hypothesis: Hypothesis, max_hops: int | None = 2,
                    ) -> SecondaryNetwork:
        with self._state_lock.read():
            return build_secondary_network(
                self.store, [hypothesis.subject, hypothesis.object],
                max_hops=max_hops, lexicon=self.lexicon)

    def evidence_for_pair(self, first: str, second: str) -> list[dict]:
        """All stored claims on one entity pair, with their source sentences."""
        a = self.resolve_entity(first).entity_id
        b = self.resolve_entity(second).entity_id
        pair = (a, b) if a <= b else (b, a)
        rows = []
        with self._state_lock.read():
            relations = self.store.query_entity(pair[0])
        for relation in relations:
            if relation.pair != pair:
                continue
            title = (self.corpus.get(relation.doc_id).title
                     if relation.doc_id in self.corpus else "")
            rows.append({
                "doc_id": relation.doc_id,
                "title": title,
                "sentence_index": relation.sentence_index,
                "predicate": relation.predicate,
                "polarity": int(relation.polarity),
                "evidence": relation.evidence,
            })
        return rows

    def evidence_for(self, result: TestResult) -> list[dict]:
        """Evidence rows for a report: pair relations in supporting docs."""
        pair = result.hypothesis.pair
        rows = []
        for doc_id in result.supporting_doc_ids:
            title = self.corpus.get(doc_id).title if doc_id in self.corpus else ""
            for relation in self.store.relations_for_doc(doc_id):
                if relation.pair != pair:
                    continue
                rows.append({
                    "doc_id": doc_id,
                    "title": title,
                    "sentence_index": relation.sentence_index,
                    "predicate": relation.predicate,
                    "polarity": int(relation.polarity),
                    "evidence": relation.evidence,
                })
        return rows
