"""Entity dictionary: canonical ids, typed entries, alias resolution.

Mentions are found by longest-match over token n-grams, so a two-token
alias like "Melanocortin4 receptor" always beats a one-token alias that
overlaps it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .corpus import Sentence, tokenize

__all__ = [
    "ENTITY_TYPES",
    "Entity",
    "Mention",
    "Lexicon",
    "LexiconError",
    "AmbiguousAliasError",
    "load_lexicon",
    "bundled_lexicon_path",
]

ENTITY_TYPES = frozenset({"gene", "protein", "disease", "drug", "chemical", "other"})


class LexiconError(Exception):
    """Malformed lexicon input."""


class AmbiguousAliasError(LexiconError):
    """The same alias maps to two different entities."""


@dataclass(frozen=True)
class Entity:
    entity_id: str
    canonical_name: str
    entity_type: str
    aliases: tuple[str, ...]


@dataclass(frozen=True)
class Mention:
    """A resolved entity occurrence: token span [start, end) of a sentence."""

    entity_id: str
    sentence_index: int
    start: int
    end: int
    surface: str


class Lexicon:
    """Immutable-after-load alias index over known entities."""

    def __init__(self) -> None:
        self._entities: dict[str, Entity] = {}
        # token-tuple of the case-folded alias -> entity_id
        self._alias_index: dict[tuple[str, ...], str] = {}
        self._max_alias_tokens = 0

    def add(self, entity: Entity) -> None:
        if entity.entity_type not in ENTITY_TYPES:
            raise LexiconError(
                f"entity {entity.entity_id!r}: unknown type {entity.entity_type!r}")
        if not entity.aliases:
            raise LexiconError(f"entity {entity.entity_id!r}: aliases must be non-empty")
        if entity.entity_id in self._entities:
            raise LexiconError(f"duplicate entity id {entity.entity_id!r}")
        for alias in entity.aliases:
            key = tokenize(alias)
            if not key:
                raise LexiconError(
                    f"entity {entity.entity_id!r}: alias {alias!r} has no tokens")
            owner = self._alias_index.get(key)
            if owner is not None and owner != entity.entity_id:
                raise AmbiguousAliasError(
                    f"alias {alias!r} maps to both {owner!r} and {entity.entity_id!r}")
        self._entities[entity.entity_id] = entity
        for alias in entity.aliases:
            key = tokenize(alias)
            self._alias_index[key] = entity.entity_id
            self._max_alias_tokens = max(self._max_alias_tokens, len(key))

    def get(self, entity_id: str) -> Entity | None:
        return self._entities.get(entity_id)

    def resolve(self, surface: str) -> str | None:
        """Map a surface form (alias or id, any case) to an entity id."""
        if surface in self._entities:
            return surface
        return self._alias_index.get(tokenize(surface))

    def entity_type(self, entity_id: str) -> str:
        entity = self._entities.get(entity_id)
        return entity.entity_type if entity is not None else "other"

    def __len__(self) -> int:
        return len(self._entities)

    def __iter__(self) -> Iterator[Entity]:
        return iter(self._entities.values())

    def search(self, query: str, limit: int = 20) -> list[Entity]:
        """Case-insensitive substring search over aliases (UI autocomplete)."""
        needle = query.strip().lower()
        if not needle:
            return []
        hits = [e for e in self._entities.values()
                if any(needle in a.lower() for a in e.aliases)]
        hits.sort(key=lambda e: e.entity_id)
        return hits[:limit]

    def match_entities(self, sentence: Sentence) -> list[Mention]:
        """All non-overlapping mentions in a sentence.

        Among overlapping alias candidates the longest token span wins;
        ties break toward the leftmost start. Aliases match whole token
        sequences only, never substrings of a token.
        """
        tokens = sentence.tokens
        if not tokens or not self._alias_index:
            return []
        candidates: list[tuple[int, int, str]] = []
        max_len = min(self._max_alias_tokens, len(tokens))
        for start in range(len(tokens)):
            for length in range(min(max_len, len(tokens) - start), 0, -1):
                entity_id = self._alias_index.get(tokens[start:start + length])
                if entity_id is not None:
                    candidates.append((start, start + length, entity_id))
        candidates.sort(key=lambda c: (-(c[1] - c[0]), c[0]))
        occupied = [False] * len(tokens)
        chosen: list[tuple[int, int, str]] = []
        for start, end, entity_id in candidates:
            if any(occupied[start:end]):
                continue
            for i in range(start, end):
                occupied[i] = True
            chosen.append((start, end, entity_id))
        chosen.sort(key=lambda c: c[0])
        return [
            Mention(
                entity_id=entity_id,
                sentence_index=sentence.index,
                start=start,
                end=end,
                surface=" ".join(tokens[start:end]),
            )
            for start, end, entity_id in chosen
        ]


def load_lexicon(path: str | Path) -> Lexicon:
    """Read a JSONL lexicon file.

    One ``{"id": ..., "type": ..., "aliases": [...]}`` object per line;
    the first alias is the canonical name. Ambiguous aliases (one surface
    form, two entities) fail the load, naming the alias.
    """
    path = Path(path)
    if not path.exists():
        raise LexiconError(f"lexicon file not found: {path}")
    lexicon = Lexicon()
    with path.open("r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LexiconError(f"line {line_no}: invalid JSON ({exc.msg})") from exc
            try:
                entity_id = record["id"]
                entity_type = record["type"]
                aliases = record["aliases"]
            except (KeyError, TypeError) as exc:
                raise LexiconError(f"line {line_no}: missing field {exc}") from exc
            if (not isinstance(aliases, list) or not aliases
                    or not all(isinstance(a, str) and a for a in aliases)):
                raise LexiconError(
                    f"line {line_no}: 'aliases' must be a non-empty list of strings")
            entity = Entity(
                entity_id=entity_id,
                canonical_name=aliases[0],
                entity_type=entity_type,
                aliases=tuple(aliases),
            )
            try:
                lexicon.add(entity)
            except LexiconError as exc:
                raise type(exc)(f"line {line_no}: {exc}") from exc
    return lexicon


def bundled_lexicon_path() -> Path:
    """Path of the starter lexicon shipped with the package."""
    return Path(__file__).parent / "data" / "lexicon.jsonl"
