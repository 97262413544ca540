"""Secondary network: everything transitively connected to the hypothesis pair.

Unlike support counting, which is strictly per-paper, the secondary
network merges all documents into one signed graph and expands outward
from both seed entities, so bridges across papers surface too. Entities
disconnected from the seeds never appear.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .extraction import Polarity
from .lexicon import Lexicon
from .store import RelationStore

__all__ = [
    "NetworkNode",
    "NetworkEdge",
    "SecondaryNetwork",
    "reachable",
    "build_secondary_network",
    "export_network",
    "network_from_json",
]


@dataclass(frozen=True)
class NetworkNode:
    id: str
    type: str
    hops: int


@dataclass(frozen=True)
class NetworkEdge:
    """Corpus-wide merged edge: distinct documents sharing one claim."""

    source: str
    target: str
    predicate: str
    polarity: Polarity
    evidence_count: int
    doc_ids: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "polarity", Polarity(self.polarity))


@dataclass(frozen=True)
class SecondaryNetwork:
    seeds: tuple[str, ...]
    nodes: tuple[NetworkNode, ...]
    edges: tuple[NetworkEdge, ...]

    @property
    def no_evidence(self) -> bool:
        """True when the seeds have no relations at all."""
        return not self.edges

    def node_ids(self) -> set[str]:
        return {node.id for node in self.nodes}

    def to_json(self) -> dict:
        return {
            "seeds": list(self.seeds),
            "nodes": [{"id": n.id, "type": n.type, "hops": n.hops}
                      for n in self.nodes],
            "edges": [
                {
                    "source": e.source,
                    "target": e.target,
                    "predicate": e.predicate,
                    "polarity": int(e.polarity),
                    "evidence_count": e.evidence_count,
                    "doc_ids": list(e.doc_ids),
                }
                for e in self.edges
            ],
        }


def reachable(graph: Mapping[str, Iterable[str]], start: str,
              max_hops: int | None = None) -> set[str]:
    """BFS reachability from ``start``, optionally hop-bounded.

    A node absent from the graph is reachable only from itself.
    """
    seen = {start}
    frontier = [start]
    hops = 0
    while frontier and (max_hops is None or hops < max_hops):
        hops += 1
        next_frontier: list[str] = []
        for node in frontier:
            for neighbor in graph.get(node, ()):
                if neighbor not in seen:
                    seen.add(neighbor)
                    next_frontier.append(neighbor)
        frontier = next_frontier
    return seen


def _merged_graph(store: RelationStore, positive_only: bool,
                  ) -> dict[tuple[str, str, str, int], set[str]]:
    """Group relations by (pair, predicate, polarity) -> contributing doc ids."""
    merged: dict[tuple[str, str, str, int], set[str]] = {}
    for relation in store.relations():
        if positive_only and relation.polarity != Polarity.POSITIVE:
            continue
        key = (relation.subject, relation.object, relation.predicate,
               int(relation.polarity))
        merged.setdefault(key, set()).add(relation.doc_id)
    return merged


def build_secondary_network(store: RelationStore, seeds: Iterable[str],
                            max_hops: int | None = 2,
                            lexicon: Lexicon | None = None,
                            positive_only: bool = False) -> SecondaryNetwork:
    """Expand the corpus-wide graph outward from both seed entities.

    Nodes carry their hop distance from the nearest seed; edges are merged
    per (pair, predicate, polarity) with one evidence count per distinct
    contributing document. Seeds with no relations yield a seed-only
    network whose ``no_evidence`` flag is set.
    """
    seed_list = sorted(set(seeds))
    merged = _merged_graph(store, positive_only)
    adjacency: dict[str, set[str]] = {}
    for a, b, _predicate, _polarity in merged:
        adjacency.setdefault(a, set()).add(b)
        adjacency.setdefault(b, set()).add(a)

    hops: dict[str, int] = {seed: 0 for seed in seed_list}
    frontier = list(seed_list)
    depth = 0
    while frontier and (max_hops is None or depth < max_hops):
        depth += 1
        next_frontier: list[str] = []
        for node in frontier:
            for neighbor in sorted(adjacency.get(node, ())):
                if neighbor not in hops:
                    hops[neighbor] = depth
                    next_frontier.append(neighbor)
        frontier = next_frontier

    included = set(hops)
    nodes = tuple(
        NetworkNode(
            id=node,
            type=lexicon.entity_type(node) if lexicon is not None else "other",
            hops=hop,
        )
        for node, hop in sorted(hops.items())
    )
    edges = tuple(
        NetworkEdge(
            source=a,
            target=b,
            predicate=predicate,
            polarity=Polarity(polarity),
            evidence_count=len(doc_ids),
            doc_ids=tuple(sorted(doc_ids)),
        )
        for (a, b, predicate, polarity), doc_ids in sorted(
            merged.items(), key=lambda item: item[0])
        if a in included and b in included
    )
    return SecondaryNetwork(seeds=tuple(seed_list), nodes=nodes, edges=edges)


def _dot_quote(value: str) -> str:
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_network(network: SecondaryNetwork, fmt: str = "json") -> bytes:
    """Serialize a network deterministically as JSON or Graphviz DOT.

    DOT renders an undirected graph with dashed, "-"-labelled negative
    edges and double-circled seed nodes.
    """
    if fmt == "json":
        return (json.dumps(network.to_json(), indent=2, sort_keys=True) + "\n").encode()
    if fmt == "dot":
        seeds = set(network.seeds)
        lines = ["graph secondary_network {"]
        for node in network.nodes:
            attrs = [f"label={_dot_quote(node.id)}"]
            if node.id in seeds:
                attrs.append("shape=doublecircle")
            lines.append(f"  {_dot_quote(node.id)} [{', '.join(attrs)}];")
        for edge in network.edges:
            attrs = [f"label={_dot_quote(edge.predicate)}"]
            if edge.polarity == Polarity.NEGATIVE:
                attrs = ['style=dashed, label="-"']
            lines.append(
                f"  {_dot_quote(edge.source)} -- {_dot_quote(edge.target)}"
                f" [{', '.join(attrs)}];")
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown export format {fmt!r}")


def network_from_json(payload: dict | bytes | str) -> SecondaryNetwork:
    """Inverse of the JSON export (round-trips exactly)."""
    if isinstance(payload, (bytes, str)):
        payload = json.loads(payload)
    return SecondaryNetwork(
        seeds=tuple(payload["seeds"]),
        nodes=tuple(NetworkNode(id=n["id"], type=n["type"], hops=n["hops"])
                    for n in payload["nodes"]),
        edges=tuple(
            NetworkEdge(
                source=e["source"],
                target=e["target"],
                predicate=e["predicate"],
                polarity=Polarity(e["polarity"]),
                evidence_count=e["evidence_count"],
                doc_ids=tuple(e["doc_ids"]),
            )
            for e in payload["edges"]
        ),
    )
