"""Support counting, chi-square statistic, p-value and the accept/reject call.

The observed frequency o is the number of corpus documents whose relation
graph supports the hypothesis; the expected frequency e is chosen by the
user. chi2 = (o - e)^2 / e is referred to the upper tail of the chi-square
distribution at one degree of freedom, and the hypothesis is accepted iff
p >= alpha (boundary inclusive).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .corpus import Corpus
from .extraction import NegationLexicon, VerbLexicon
from .hypothesis import Hypothesis, parse_hypothesis
from .lexicon import Lexicon
from .store import PaperGraph, RelationStore

__all__ = [
    "Decision",
    "SupportCount",
    "TestResult",
    "SUPPORT_MODES",
    "paper_supports",
    "count_support",
    "chi_square",
    "p_value",
    "decide",
    "test_hypothesis",
]

SUPPORT_MODES = ("strict", "path")


class Decision(str, enum.Enum):
    ACCEPTED = "Accepted"
    REJECTED = "Rejected"


@dataclass(frozen=True)
class SupportCount:
    """Observed support: o documents out of N, with their ids."""

    observed: int
    total: int
    supporting_doc_ids: tuple[str, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.observed <= self.total:
            raise ValueError("observed count must lie in [0, N]")
        if len(self.supporting_doc_ids) != self.observed:
            raise ValueError("supporting_doc_ids must have length o")


@dataclass(frozen=True)
class TestResult:
    """Full test record: counts, statistic, p-value, decision."""

    hypothesis: Hypothesis
    observed: int
    expected: float
    total: int
    chi2: float
    p_value: float
    decision: Decision
    alpha: float
    supporting_doc_ids: tuple[str, ...]
    mode: str
    match_predicate: bool

    def to_json(self) -> dict:
        return {
            "hypothesis": self.hypothesis.to_json(),
            "observed": self.observed,
            "expected": self.expected,
            "total": self.total,
            "chi2": self.chi2,
            "p_value": self.p_value,
            "decision": self.decision.value,
            "alpha": self.alpha,
            "supporting_doc_ids": list(self.supporting_doc_ids),
            "mode": self.mode,
            "match_predicate": self.match_predicate,
        }


def _signed_simple_path_exists(graph: PaperGraph, start: str, goal: str,
                               target_sign: int) -> bool:
    """DFS for a simple path whose edge-polarity product equals target_sign."""
    adjacency = graph.adjacency()
    if start not in adjacency or goal not in adjacency:
        return False

    def visit(node: str, sign: int, visited: set[str]) -> bool:
        if node == goal:
            return sign == target_sign
        for relation in adjacency[node]:
            neighbor = relation.other(node)
            if neighbor in visited:
                continue
            if visit(neighbor, sign * int(relation.polarity), visited | {neighbor}):
                return True
        return False

    return visit(start, 1, {start})


def paper_supports(graph: PaperGraph, hypothesis: Hypothesis,
                   mode: str = "strict", match_predicate: bool = False) -> bool:
    """Does one paper's graph support the hypothesis?

    strict: a direct edge on the pair with matching polarity (and matching
    predicate stem when ``match_predicate``). path: any simple path between
    the entities whose polarity product matches; path search is
    predicate-blind, mirroring the sign-only graph query it implements.
    """
    if mode not in SUPPORT_MODES:
        raise ValueError(f"unknown support mode {mode!r}")
    a, b = hypothesis.pair
    if mode == "strict":
        for relation in graph.edges:
            if relation.pair != (a, b):
                continue
            if relation.polarity != hypothesis.polarity:
                continue
            if match_predicate and relation.predicate != hypothesis.predicate:
                continue
            return True
        return False
    return _signed_simple_path_exists(graph, a, b, int(hypothesis.polarity))


def count_support(store: RelationStore, corpus: Corpus, hypothesis: Hypothesis,
                  mode: str = "strict", match_predicate: bool = False) -> SupportCount:
    """Count the documents whose graphs support the hypothesis."""
    supporting: list[str] = []
    for doc in corpus:
        edges = tuple(store.relations_for_doc(doc.doc_id))
        nodes: set[str] = set()
        for relation in edges:
            nodes.add(relation.subject)
            nodes.add(relation.object)
        graph = PaperGraph(doc_id=doc.doc_id, nodes=frozenset(nodes), edges=edges)
        if paper_supports(graph, hypothesis, mode, match_predicate):
            supporting.append(doc.doc_id)
    return SupportCount(observed=len(supporting), total=corpus.n,
                        supporting_doc_ids=tuple(supporting))


def chi_square(observed: float, expected: float) -> float:
    """(o - e)^2 / e for the single-category test."""
    if expected <= 0:
        raise ValueError("expected frequency must be positive")
    deviation = observed - expected
    return deviation * deviation / expected


def _regularized_gamma_p_series(a: float, x: float) -> float:
    """Lower regularized incomplete gamma P(a, x) by power series (x < a + 1)."""
    term = 1.0 / a
    total = term
    denom = a
    for _ in range(500):
        denom += 1.0
        term *= x / denom
        total += term
        if abs(term) < abs(total) * 1e-16:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _regularized_gamma_q_contfrac(a: float, x: float) -> float:
    """Upper regularized incomplete gamma Q(a, x) by continued fraction (x >= a + 1)."""
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 500):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def regularized_gamma_q(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a)."""
    if a <= 0:
        raise ValueError("shape parameter must be positive")
    if x < 0:
        raise ValueError("argument must be non-negative")
    if x == 0:
        return 1.0
    if x < a + 1.0:
        q = 1.0 - _regularized_gamma_p_series(a, x)
    else:
        q = _regularized_gamma_q_contfrac(a, x)
    return min(max(q, 0.0), 1.0)


def p_value(chi2: float, df: int = 1) -> float:
    """Upper-tail probability of the chi-square distribution.

    Q(df/2, chi2/2); for df=1 this equals erfc(sqrt(chi2/2)).
    """
    if chi2 < 0:
        raise ValueError("chi-square statistic must be non-negative")
    if df < 1:
        raise ValueError("degrees of freedom must be at least 1")
    return regularized_gamma_q(df / 2.0, chi2 / 2.0)


def decide(p: float, alpha: float = 0.05) -> Decision:
    """Accept iff p >= alpha; the boundary itself accepts."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p-value must lie in [0, 1]")
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie in (0, 1)")
    return Decision.ACCEPTED if p >= alpha else Decision.REJECTED


def test_hypothesis(text: str, expected: float, *, store: RelationStore,
                    corpus: Corpus, lexicon: Lexicon,
                    negation: NegationLexicon, verbs: VerbLexicon,
                    mode: str = "strict", match_predicate: bool = False,
                    alpha: float = 0.05) -> TestResult:
    """End-to-end test: parse, count support, chi-square, p-value, decide."""
    if expected <= 0:
        raise ValueError("expected frequency must be positive")
    if mode not in SUPPORT_MODES:
        raise ValueError(f"unknown support mode {mode!r}")
    hypothesis = parse_hypothesis(text, lexicon, negation, verbs)
    return evaluate_hypothesis(hypothesis, expected, store=store, corpus=corpus,
                               mode=mode, match_predicate=match_predicate,
                               alpha=alpha)


def evaluate_hypothesis(hypothesis: Hypothesis, expected: float, *,
                        store: RelationStore, corpus: Corpus,
                        mode: str = "strict", match_predicate: bool = False,
                        alpha: float = 0.05) -> TestResult:
    """Test an already-parsed hypothesis (shared by text and graph routes)."""
    if expected <= 0:
        raise ValueError("expected frequency must be positive")
    support = count_support(store, corpus, hypothesis, mode, match_predicate)
    chi2 = chi_square(support.observed, expected)
    p = p_value(chi2, df=1)
    return TestResult(
        hypothesis=hypothesis,
        observed=support.observed,
        expected=float(expected),
        total=support.total,
        chi2=chi2,
        p_value=p,
        decision=decide(p, alpha),
        alpha=alpha,
        supporting_doc_ids=support.supporting_doc_ids,
        mode=mode,
        match_predicate=match_predicate,
    )
