"""hypotest: statistical hypothesis testing against a mined text corpus.

Extracts signed entity relations from biomedical-style text, tests a
natural-language hypothesis with a chi-square goodness-of-fit check over
per-paper support counts, and builds the secondary network of transitively
related entities for iterative refinement.
"""

from .corpus import Corpus, Document, Sentence, load_corpus, split_sentences, tokenize
from .engine import Engine, IngestSummary, UnknownEntityError
from .extraction import (NegationLexicon, Polarity, Relation, VerbLexicon,
                         classify_polarity, extract_predicate, extract_relations)
from .hypothesis import (Hypothesis, hypothesis_from_selection, parse_hypothesis,
                         render_hypothesis_text)
from .lexicon import Entity, Lexicon, Mention, load_lexicon
from .network import (SecondaryNetwork, build_secondary_network, export_network,
                      network_from_json, reachable)
from .stats import (Decision, SupportCount, TestResult, chi_square, count_support,
                    decide, p_value, paper_supports, test_hypothesis)
from .stemmer import stem
from .store import PaperGraph, RelationStore

__version__ = "0.1.0"
