"""Suffix-stripping stemmer for relation verbs.

Reduces inflected verb forms ("causes", "binding", "inhibited") to the
stems stored in the relation database, so corpus sentences and hypothesis
sentences normalize to the same predicate.
"""

from __future__ import annotations

# Stems whose final silent "e" is swallowed by -ing/-ed inflection
# ("causing" -> "caus"). Stripping restores the "e" for these.
SILENT_E_STEMS = frozenset({
    "activate",
    "aggravate",
    "alleviate",
    "ameliorate",
    "associate",
    "attenuate",
    "cause",
    "contribute",
    "cure",
    "decrease",
    "elevate",
    "encode",
    "enhance",
    "exacerbate",
    "generate",
    "improve",
    "increase",
    "induce",
    "involve",
    "mediate",
    "modulate",
    "produce",
    "promote",
    "reduce",
    "regulate",
    "relate",
    "release",
    "require",
    "reverse",
    "stimulate",
})

# -es is stripped whole only after sibilant endings ("suppresses",
# "catches"); elsewhere the bare -s rule applies ("causes" -> "cause").
_SIBILANT_ENDINGS = ("ss", "sh", "ch", "x", "zz", "o")


def _restore_e(base: str) -> str:
    return base + "e" if base + "e" in SILENT_E_STEMS else base


def stem(word: str) -> str:
    """Strip a common verb suffix from a lowercase token.

    Rules are applied in order: -ies, -ing, -ed, -es (after sibilants),
    -s (never after -ss). Length guards keep short words like "led" or
    "being" untouched. Idempotent over the bundled relation-verb list.
    """
    if len(word) > 4 and word.endswith("ies"):
        return word[:-3] + "y"
    if len(word) > 5 and word.endswith("ing"):
        return _restore_e(word[:-3])
    if len(word) > 4 and word.endswith("ed"):
        return _restore_e(word[:-2])
    if len(word) > 4 and word.endswith("es") and word[:-2].endswith(_SIBILANT_ENDINGS):
        return _restore_e(word[:-2])
    if len(word) > 3 and word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    return word
