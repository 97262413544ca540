"""Report rendering: CSV summaries plus matplotlib figures on disk.

Produces, for one hypothesis test: the result row and per-document
evidence as CSV, the secondary network as JSON/PNG, and the chi-square
density with the observed statistic and shaded upper tail.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx

from .network import SecondaryNetwork, export_network
from .stats import TestResult

__all__ = ["write_report", "render_network_figure", "render_chi_square_figure"]

_RESULT_COLUMNS = [
    "hypothesis", "subject", "object", "predicate", "polarity",
    "observed", "total", "expected", "chi2", "p_value", "alpha",
    "decision", "mode", "match_predicate",
]

_EVIDENCE_COLUMNS = [
    "doc_id", "title", "sentence_index", "predicate", "polarity", "evidence",
]


def _chi1_density(x: float) -> float:
    return math.exp(-x / 2.0) / math.sqrt(2.0 * math.pi * x)


def render_chi_square_figure(result: TestResult, path: Path) -> None:
    """Chi-square density (df=1) with the statistic marked and tail shaded."""
    upper = max(10.0, result.chi2 * 1.5)
    xs = [0.02 + i * (upper - 0.02) / 400 for i in range(401)]
    ys = [_chi1_density(x) for x in xs]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, ys, color="steelblue")
    tail = [x for x in xs if x >= result.chi2]
    if tail:
        ax.fill_between(tail, [_chi1_density(x) for x in tail],
                        color="steelblue", alpha=0.3,
                        label=f"p = {result.p_value:.4f}")
    ax.axvline(result.chi2, color="firebrick", linestyle="--",
               label=f"chi2 = {result.chi2:.4f}")
    ax.set_xlabel("chi-square statistic")
    ax.set_ylabel("density (df = 1)")
    ax.set_ylim(bottom=0, top=min(2.0, max(ys) * 1.05))
    ax.set_title(f"{result.decision.value} at alpha = {result.alpha}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_network_figure(network: SecondaryNetwork, path: Path) -> None:
    """Secondary network drawing: seeds highlighted, negative edges dashed."""
    graph = nx.MultiGraph()
    for node in network.nodes:
        graph.add_node(node.id, hops=node.hops)
    for edge in network.edges:
        graph.add_edge(edge.source, edge.target,
                       predicate=edge.predicate, polarity=int(edge.polarity))
    fig, ax = plt.subplots(figsize=(7, 6))
    if graph.number_of_nodes() == 0:
        ax.text(0.5, 0.5, "no evidence found", ha="center", va="center")
        ax.set_axis_off()
    else:
        pos = nx.spring_layout(graph, seed=7)
        seeds = set(network.seeds)
        colors = ["#c0392b" if n in seeds else "#5d8aa8" for n in graph.nodes]
        nx.draw_networkx_nodes(graph, pos, ax=ax, node_color=colors,
                               node_size=600)
        nx.draw_networkx_labels(graph, pos, ax=ax, font_size=8)
        positive = [(e.source, e.target) for e in network.edges
                    if int(e.polarity) > 0]
        negative = [(e.source, e.target) for e in network.edges
                    if int(e.polarity) < 0]
        nx.draw_networkx_edges(graph, pos, edgelist=positive, ax=ax)
        nx.draw_networkx_edges(graph, pos, edgelist=negative, ax=ax,
                               style="dashed", edge_color="gray")
        if len(network.edges) <= 20:
            labels = {(e.source, e.target):
                      e.predicate if int(e.polarity) > 0 else f"-{e.predicate}"
                      for e in network.edges}
            nx.draw_networkx_edge_labels(graph, pos, edge_labels=labels,
                                         ax=ax, font_size=7)
        ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(result: TestResult, network: SecondaryNetwork,
                 outdir: str | Path, evidence: list[dict] | None = None,
                 ) -> list[Path]:
    """Write result.csv, evidence.csv, network.json, network.png, chi_square.png."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    result_path = outdir / "result.csv"
    with result_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=_RESULT_COLUMNS)
        writer.writeheader()
        writer.writerow({
            "hypothesis": result.hypothesis.source_text,
            "subject": result.hypothesis.subject,
            "object": result.hypothesis.object,
            "predicate": result.hypothesis.predicate,
            "polarity": int(result.hypothesis.polarity),
            "observed": result.observed,
            "total": result.total,
            "expected": result.expected,
            "chi2": f"{result.chi2:.6f}",
            "p_value": f"{result.p_value:.6f}",
            "alpha": result.alpha,
            "decision": result.decision.value,
            "mode": result.mode,
            "match_predicate": result.match_predicate,
        })
    written.append(result_path)

    evidence_path = outdir / "evidence.csv"
    with evidence_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=_EVIDENCE_COLUMNS)
        writer.writeheader()
        for row in evidence or []:
            writer.writerow({k: row.get(k, "") for k in _EVIDENCE_COLUMNS})
    written.append(evidence_path)

    network_path = outdir / "network.json"
    network_path.write_bytes(export_network(network, "json"))
    written.append(network_path)

    png_path = outdir / "network.png"
    render_network_figure(network, png_path)
    written.append(png_path)

    chi_path = outdir / "chi_square.png"
    render_chi_square_figure(result, chi_path)
    written.append(chi_path)

    return written
