"""Persistent deduplicated relation store with per-paper and per-entity views.

The on-disk format is an append-only JSONL log replayed on open: each
accepted relation is one line, flushed and fsynced before it is indexed,
so a crash never leaves indices ahead of the log. A torn trailing line is
ignored on replay.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .extraction import Relation

__all__ = ["RelationStore", "PaperGraph", "UnknownDocumentError"]


class UnknownDocumentError(KeyError):
    """Queried doc_id was never registered with the store."""


@dataclass(frozen=True)
class PaperGraph:
    """One document's relations as an undirected signed graph."""

    doc_id: str
    nodes: frozenset[str]
    edges: tuple[Relation, ...]

    def adjacency(self) -> dict[str, list[Relation]]:
        adj: dict[str, list[Relation]] = {node: [] for node in self.nodes}
        for relation in self.edges:
            adj[relation.subject].append(relation)
            adj[relation.object].append(relation)
        return adj


def _sort_key(relation: Relation) -> tuple:
    return (relation.doc_id, relation.sentence_index, relation.subject,
            relation.object, relation.predicate, int(relation.polarity))


class RelationStore:
    """Relations keyed by (doc_id, pair, predicate, polarity).

    Many concurrent readers, one serialized writer. Reads hand out copies,
    never live index state.
    """

    def __init__(self, path: str | Path | None = None):
        self._relations: dict[tuple, Relation] = {}
        self._by_doc: dict[str, list[tuple]] = {}
        self._by_entity: dict[str, list[tuple]] = {}
        self._known_docs: set[str] = set()
        self._lock = threading.Lock()
        self._path = Path(path) if path is not None else None
        if self._path is not None and self._path.exists():
            self._replay(self._path)

    def _replay(self, path: Path) -> None:
        with path.open("r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        for i, line in enumerate(lines):
            if not line.strip():
                continue
            try:
                relation = Relation.from_json(json.loads(line))
            except (json.JSONDecodeError, KeyError, ValueError):
                if i == len(lines) - 1:
                    break  # torn trailing write from a crashed process
                raise
            self._index(relation)

    def _index(self, relation: Relation) -> bool:
        key = relation.key()
        if key in self._relations:
            return False
        self._relations[key] = relation
        self._by_doc.setdefault(relation.doc_id, []).append(key)
        self._by_entity.setdefault(relation.subject, []).append(key)
        self._by_entity.setdefault(relation.object, []).append(key)
        self._known_docs.add(relation.doc_id)
        return True

    def register_document(self, doc_id: str) -> None:
        """Make a doc_id queryable even before it has relations."""
        with self._lock:
            self._known_docs.add(doc_id)

    def save_relation(self, relation: Relation) -> bool:
        """Store a relation once; True iff it was not already present.

        The log line is durable before the indices are updated, so the
        operation is atomic: fully applied or not at all.
        """
        with self._lock:
            key = relation.key()
            if key in self._relations:
                return False
            if self._path is not None:
                with self._path.open("a", encoding="utf-8") as fh:
                    fh.write(json.dumps(relation.to_json(), ensure_ascii=False) + "\n")
                    fh.flush()
                    os.fsync(fh.fileno())
            return self._index(relation)

    def __len__(self) -> int:
        return len(self._relations)

    def __iter__(self) -> Iterator[Relation]:
        return iter(self.relations())

    def relations(self) -> list[Relation]:
        """All relations in stable (doc, sentence, pair) order."""
        with self._lock:
            items = list(self._relations.values())
        return sorted(items, key=_sort_key)

    def relations_for_doc(self, doc_id: str) -> list[Relation]:
        with self._lock:
            keys = list(self._by_doc.get(doc_id, ()))
            items = [self._relations[k] for k in keys]
        return sorted(items, key=_sort_key)

    def paper_graph(self, doc_id: str) -> PaperGraph:
        """The signed relation graph of one document.

        A known document with no relations yields an empty graph; an
        unregistered doc_id raises.
        """
        with self._lock:
            if doc_id not in self._known_docs:
                raise UnknownDocumentError(doc_id)
        edges = tuple(self.relations_for_doc(doc_id))
        nodes: set[str] = set()
        for relation in edges:
            nodes.add(relation.subject)
            nodes.add(relation.object)
        return PaperGraph(doc_id=doc_id, nodes=frozenset(nodes), edges=edges)

    def query_entity(self, entity_id: str) -> list[Relation]:
        """All relations touching an entity, in stable order."""
        with self._lock:
            keys = list(self._by_entity.get(entity_id, ()))
            items = [self._relations[k] for k in keys]
        return sorted(items, key=_sort_key)

    def doc_ids(self) -> list[str]:
        with self._lock:
            return sorted(self._known_docs)

    def export_jsonl(self) -> Iterator[str]:
        """One JSON object per relation, in stable order."""
        for relation in self.relations():
            yield json.dumps(relation.to_json(), ensure_ascii=False)
