import itertools
import random

import pytest

from hypotest.extraction import Polarity, Relation
from hypotest.network import (build_secondary_network, export_network,
                              network_from_json, reachable)
from hypotest.store import RelationStore


def store_with(edges):
    store = RelationStore()
    for doc_id, a, b, pred, pol in edges:
        store.save_relation(Relation(
            subject=a, object=b, predicate=pred, polarity=Polarity(pol),
            doc_id=doc_id, sentence_index=0, evidence=""))
    return store


def closure_oracle(nodes, pairs, seeds):
    """Floyd-Warshall style transitive closure, then union over seeds."""
    index = {n: i for i, n in enumerate(nodes)}
    n = len(nodes)
    reach = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        reach[index[a]][index[b]] = True
        reach[index[b]][index[a]] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                reach[i][j] = reach[i][j] or (reach[i][k] and reach[k][j])
    result = set()
    for seed in seeds:
        if seed not in index:
            result.add(seed)
            continue
        result.update(node for node in nodes if reach[index[seed]][index[node]])
    return result | set(seeds)


# ----------------------------------------------------------------------
# reachable
# ----------------------------------------------------------------------

def test_isolated_node_reaches_itself():
    assert reachable({}, "x") == {"x"}


def test_complete_graph_reaches_all():
    k4 = {a: [b for b in "abcd" if b != a] for a in "abcd"}
    for seed in "abcd":
        assert reachable(k4, seed) == set("abcd")


def test_hop_bound():
    chain = {"a": ["b"], "b": ["a", "c"], "c": ["b", "d"], "d": ["c"]}
    assert reachable(chain, "a", 0) == {"a"}
    assert reachable(chain, "a", 1) == {"a", "b"}
    assert reachable(chain, "a", 2) == {"a", "b", "c"}
    assert reachable(chain, "a", None) == {"a", "b", "c", "d"}


def test_reachable_matches_closure_on_random_graphs():
    rng = random.Random(17)
    names = list("abcdefgh")
    for _ in range(100):
        pairs = [(x, y) for x, y in itertools.combinations(names, 2)
                 if rng.random() < 0.25]
        adjacency = {n: set() for n in names}
        for x, y in pairs:
            adjacency[x].add(y)
            adjacency[y].add(x)
        seed = rng.choice(names)
        assert reachable(adjacency, seed) == closure_oracle(names, pairs, [seed])


# ----------------------------------------------------------------------
# build_secondary_network
# ----------------------------------------------------------------------

def test_disconnected_entities_are_excluded():
    store = store_with([
        ("p1", "a", "b", "bind", 1),
        ("p1", "b", "c", "bind", 1),
        ("p2", "d", "e", "bind", 1),
    ])
    network = build_secondary_network(store, ["a", "b"], max_hops=None)
    assert network.node_ids() == {"a", "b", "c"}
    assert not network.no_evidence


def test_empty_store_yields_seed_only_network():
    network = build_secondary_network(RelationStore(), ["u", "v"])
    assert network.node_ids() == {"u", "v"}
    assert network.edges == ()
    assert network.no_evidence
    assert all(n.hops == 0 for n in network.nodes)


def test_chain_hop_counting_from_both_seeds():
    store = store_with([
        ("p1", "a", "x", "bind", 1),
        ("p1", "x", "y", "bind", 1),
        ("p1", "y", "b", "bind", 1),
    ])
    network = build_secondary_network(store, ["a", "b"], max_hops=1)
    assert network.node_ids() == {"a", "x", "y", "b"}
    hops = {n.id: n.hops for n in network.nodes}
    assert hops == {"a": 0, "b": 0, "x": 1, "y": 1}
    unbounded = build_secondary_network(store, ["a", "b"], max_hops=None)
    assert unbounded.node_ids() == {"a", "x", "y", "b"}


def test_unbounded_equals_closure_oracle_on_random_stores():
    rng = random.Random(31)
    names = list("abcdefghij")
    for _ in range(100):
        nodes = names[:rng.randint(4, 10)]
        pairs = [(x, y) for x, y in itertools.combinations(nodes, 2)
                 if rng.random() < 0.3]
        store = store_with([(f"p{i}", a, b, "bind", rng.choice([1, -1]))
                            for i, (a, b) in enumerate(pairs)])
        seeds = rng.sample(nodes, 2)
        network = build_secondary_network(store, seeds, max_hops=None)
        assert network.node_ids() == closure_oracle(nodes, pairs, seeds)


def test_hop_monotonicity():
    rng = random.Random(41)
    names = list("abcdefgh")
    for _ in range(50):
        pairs = [(x, y) for x, y in itertools.combinations(names, 2)
                 if rng.random() < 0.3]
        store = store_with([(f"p{i}", a, b, "bind", 1)
                            for i, (a, b) in enumerate(pairs)])
        seeds = rng.sample(names, 2)
        previous = set(seeds)
        for k in (1, 2, 3):
            nodes_k = build_secondary_network(store, seeds, max_hops=k).node_ids()
            assert previous <= nodes_k
            previous = nodes_k


def test_no_isolated_non_seed_nodes():
    store = store_with([
        ("p1", "a", "b", "bind", 1),
        ("p2", "b", "c", "cause", -1),
        ("p3", "x", "y", "bind", 1),
    ])
    network = build_secondary_network(store, ["a"], max_hops=None)
    degree = {n.id: 0 for n in network.nodes}
    for edge in network.edges:
        degree[edge.source] += 1
        degree[edge.target] += 1
    for node in network.nodes:
        if node.id not in network.seeds:
            assert degree[node.id] >= 1


def test_merged_edge_accounting():
    store = store_with([
        ("p1", "a", "b", "bind", 1),
        ("p2", "a", "b", "bind", 1),
        ("p3", "a", "b", "bind", -1),
        ("p1", "b", "c", "cause", 1),
    ])
    network = build_secondary_network(store, ["a"], max_hops=None)
    merged = {(e.source, e.target, e.predicate, int(e.polarity)): e
              for e in network.edges}
    assert merged[("a", "b", "bind", 1)].evidence_count == 2
    assert merged[("a", "b", "bind", 1)].doc_ids == ("p1", "p2")
    assert merged[("a", "b", "bind", -1)].evidence_count == 1
    total_evidence = sum(e.evidence_count for e in network.edges)
    assert total_evidence == len(store.relations())


def test_negative_edges_bridge_unless_filtered():
    store = store_with([
        ("p1", "a", "x", "bind", -1),
        ("p2", "x", "b", "bind", 1),
    ])
    full = build_secondary_network(store, ["a"], max_hops=None)
    assert full.node_ids() == {"a", "x", "b"}
    positives = build_secondary_network(store, ["a"], max_hops=None,
                                        positive_only=True)
    assert positives.node_ids() == {"a"}


def test_seed_hops_are_zero_and_types_fill_from_lexicon(lexicon):
    store = store_with([
        ("p1", "carvedilol", "weight_gain", "cause", -1),
    ])
    network = build_secondary_network(store, ["carvedilol"], lexicon=lexicon)
    types = {n.id: n.type for n in network.nodes}
    assert types["carvedilol"] == "drug"
    assert types["weight_gain"] == "disease"


# ----------------------------------------------------------------------
# export
# ----------------------------------------------------------------------

def example_network():
    store = store_with([
        ("p1", "a", "b", "bind", 1),
        ("p2", "b", "c", "cause", -1),
    ])
    return build_secondary_network(store, ["a", "b"], max_hops=None)


def test_export_empty_network_valid_both_formats():
    empty = build_secondary_network(RelationStore(), ["u", "v"])
    json_bytes = export_network(empty, "json")
    assert network_from_json(json_bytes) == empty
    dot = export_network(empty, "dot").decode()
    assert dot.startswith("graph secondary_network {")
    assert dot.rstrip().endswith("}")


def test_dot_styles_negative_edges_and_seeds():
    dot = export_network(example_network(), "dot").decode()
    assert dot.count(" -- ") == 2
    assert 'style=dashed, label="-"' in dot
    assert dot.count("shape=doublecircle") == 2


def test_json_round_trip():
    network = example_network()
    assert network_from_json(export_network(network, "json")) == network


def test_export_is_deterministic():
    first = example_network()
    second = example_network()
    for fmt in ("json", "dot"):
        assert export_network(first, fmt) == export_network(second, fmt)


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        export_network(example_network(), "xml")
