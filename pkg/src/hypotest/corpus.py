"""Document collection: loading, persistence and sentence segmentation.

A corpus is an ordered set of documents, each segmented into tokenized
sentences. Documents are immutable once added; the collection is
append-only with stable doc ids so relation provenance stays valid.
"""

from __future__ import annotations

import json
import os
import re
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

__all__ = [
    "Sentence",
    "Document",
    "Corpus",
    "CorpusError",
    "DuplicateDocIdError",
    "tokenize",
    "split_sentences",
    "load_corpus",
    "DEFAULT_ABBREVIATIONS",
]

# Lowercase alphanumeric runs; internal hyphens survive so entity names
# like "MC4R" and "Calmette-Gurin" stay single tokens.
_TOKEN_RE = re.compile(r"[0-9a-z]+(?:-[0-9a-z]+)*")

# Words (with trailing period) that never end a sentence.
DEFAULT_ABBREVIATIONS = frozenset({
    "fig.", "figs.", "al.", "e.g.", "i.e.", "cf.", "vs.", "etc.",
    "no.", "ca.", "approx.", "sp.", "spp.", "subsp.", "dr.", "st.",
})

_TERMINATORS = ".?!"


class CorpusError(Exception):
    """Malformed corpus input (carries a line number when known)."""


class DuplicateDocIdError(CorpusError):
    """A document id was added twice."""


def tokenize(text: str) -> tuple[str, ...]:
    """Lowercase tokens: split on whitespace/punctuation, keep internal hyphens."""
    return tuple(_TOKEN_RE.findall(text.lower()))


@dataclass(frozen=True)
class Sentence:
    """One segmented sentence with its 0-based position and token list."""

    index: int
    text: str
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class Document:
    doc_id: str
    title: str
    text: str
    sentences: tuple[Sentence, ...]


def _is_boundary(text: str, term_start: int, term_end: int,
                 abbreviations: frozenset[str]) -> bool:
    """Decide whether the terminator run text[term_start:term_end] ends a sentence.

    Boundary rule: terminator followed by whitespace + uppercase letter, or
    end of text. A period after a listed abbreviation never splits; species
    initials ("E. coli") are already covered by the lowercase look-ahead.
    """
    if text[term_start] == ".":
        word_start = term_start
        while word_start > 0 and not text[word_start - 1].isspace():
            word_start -= 1
        word = text[word_start:term_start + 1].lower()
        if word in abbreviations:
            return False
    i = term_end
    if i >= len(text):
        return True
    if not text[i].isspace():
        return False
    while i < len(text) and text[i].isspace():
        i += 1
    return i < len(text) and text[i].isupper()


def split_sentences(text: str,
                    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
                    ) -> list[Sentence]:
    """Deterministic rule-based sentence segmentation.

    Splits after ``. ? !`` runs that pass :func:`_is_boundary`; any trailing
    text without a terminator becomes the final sentence. The concatenation
    of the returned sentence texts covers the input modulo whitespace.
    """
    chunks: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in _TERMINATORS:
            j = i + 1
            while j < n and text[j] in _TERMINATORS:
                j += 1
            if _is_boundary(text, i, j, abbreviations):
                chunk = text[start:j].strip()
                if chunk:
                    chunks.append(chunk)
                start = j
            i = j
        else:
            i += 1
    tail = text[start:].strip()
    if tail:
        chunks.append(tail)
    return [Sentence(index=k, text=t, tokens=tokenize(t))
            for k, t in enumerate(chunks)]


def _parse_record(line: str, line_no: int) -> dict:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorpusError(f"line {line_no}: invalid JSON ({exc.msg})") from exc
    if not isinstance(record, dict):
        raise CorpusError(f"line {line_no}: record must be a JSON object")
    text = record.get("text")
    if not isinstance(text, str) or not text.strip():
        raise CorpusError(f"line {line_no}: missing or empty 'text' field")
    doc_id = record.get("id")
    if doc_id is not None and (not isinstance(doc_id, str) or not doc_id):
        raise CorpusError(f"line {line_no}: 'id' must be a non-empty string")
    title = record.get("title", "")
    if not isinstance(title, str):
        raise CorpusError(f"line {line_no}: 'title' must be a string")
    return {"id": doc_id, "title": title, "text": text}


class Corpus:
    """Ordered, append-only document collection.

    When constructed with a ``path``, every added document is appended to
    that JSONL file and the file is replayed on open, so the collection
    survives restarts. Reads are lock-free on immutable documents; writes
    are serialized.
    """

    def __init__(self, path: str | Path | None = None,
                 abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS):
        self._docs: dict[str, Document] = {}
        self._abbreviations = abbreviations
        self._lock = threading.Lock()
        self._auto_counter = 1
        self._path = Path(path) if path is not None else None
        if self._path is not None and self._path.exists():
            self._replay(self._path)

    def _replay(self, path: Path) -> None:
        with path.open("r", encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                record = _parse_record(line, line_no)
                self._insert(record["id"], record["title"], record["text"],
                             line_no=line_no, persist=False)

    def _insert(self, doc_id: str | None, title: str, text: str,
                line_no: int | None = None, persist: bool = True) -> str:
        if doc_id is None:
            while f"doc-{self._auto_counter}" in self._docs:
                self._auto_counter += 1
            doc_id = f"doc-{self._auto_counter}"
            self._auto_counter += 1
        if doc_id in self._docs:
            where = f" on line {line_no}" if line_no is not None else ""
            raise DuplicateDocIdError(f"duplicate doc_id {doc_id!r}{where}")
        doc = Document(
            doc_id=doc_id,
            title=title,
            text=text,
            sentences=tuple(split_sentences(text, self._abbreviations)),
        )
        if persist and self._path is not None:
            line = json.dumps({"id": doc_id, "title": title, "text": text},
                              ensure_ascii=False)
            with self._path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()
                os.fsync(fh.fileno())
        self._docs[doc_id] = doc
        return doc_id

    def add_document(self, title: str, text: str,
                     doc_id: str | None = None) -> str:
        """Add one document; returns its (possibly auto-assigned) doc id.

        Empty text is rejected. Adding the same text twice under auto ids
        creates two documents: deduplication happens at the relation level,
        not here.
        """
        if not text or not text.strip():
            raise ValueError("document text must be non-empty")
        with self._lock:
            return self._insert(doc_id, title, text)

    def get(self, doc_id: str) -> Document:
        return self._docs[doc_id]

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self._docs

    def __iter__(self) -> Iterator[Document]:
        return iter(list(self._docs.values()))

    def __len__(self) -> int:
        return len(self._docs)

    @property
    def n(self) -> int:
        """Total document count (the chi-square denominator's N)."""
        return len(self._docs)

    def doc_ids(self) -> list[str]:
        return list(self._docs.keys())


def load_corpus(path: str | Path,
                abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS) -> Corpus:
    """Read a JSONL corpus file into an in-memory corpus.

    One ``{"id": ..., "title": ..., "text": ...}`` object per line; ``id``
    is optional. Malformed records and duplicate ids are reported with
    their line number.
    """
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"corpus file not found: {path}")
    corpus = Corpus(abbreviations=abbreviations)
    with path.open("r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            record = _parse_record(line, line_no)
            corpus._insert(record["id"], record["title"], record["text"],
                           line_no=line_no, persist=False)
    return corpus


def iter_records(lines: Iterable[str]) -> Iterator[dict]:
    """Parse JSONL corpus records, yielding normalized dicts (1-based errors)."""
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        yield _parse_record(line, line_no)
