// Preview-only mirror of the server's verb normalization, so the live
// sentence preview matches what the server will render. The server remains
// the source of truth: submissions go through /api/hypothesis/graph, whose
// response echoes the authoritative rendered text.

const SILENT_E_STEMS = new Set([
  "activate", "aggravate", "alleviate", "ameliorate", "associate",
  "attenuate", "cause", "contribute", "cure", "decrease", "elevate",
  "encode", "enhance", "exacerbate", "generate", "improve", "increase",
  "induce", "involve", "mediate", "modulate", "produce", "promote",
  "reduce", "regulate", "relate", "release", "require", "reverse",
  "stimulate",
]);

const SIBILANT_ENDINGS = ["ss", "sh", "ch", "x", "zz", "o"];

function restoreE(base: string): string {
  return SILENT_E_STEMS.has(base + "e") ? base + "e" : base;
}

function endsWithAny(word: string, suffixes: string[]): boolean {
  return suffixes.some((s) => word.endsWith(s));
}

export function stem(word: string): string {
  if (word.length > 4 && word.endsWith("ies")) {
    return word.slice(0, -3) + "y";
  }
  if (word.length > 5 && word.endsWith("ing")) {
    return restoreE(word.slice(0, -3));
  }
  if (word.length > 4 && word.endsWith("ed")) {
    return restoreE(word.slice(0, -2));
  }
  if (
    word.length > 4 &&
    word.endsWith("es") &&
    endsWithAny(word.slice(0, -2), SIBILANT_ENDINGS)
  ) {
    return restoreE(word.slice(0, -2));
  }
  if (word.length > 3 && word.endsWith("s") && !word.endsWith("ss")) {
    return word.slice(0, -1);
  }
  return word;
}

function thirdPerson(verbStem: string): string {
  if (endsWithAny(verbStem, ["s", "sh", "ch", "x", "z", "o"])) {
    return verbStem + "es";
  }
  if (
    verbStem.endsWith("y") &&
    verbStem.length > 1 &&
    !"aeiou".includes(verbStem[verbStem.length - 2])
  ) {
    return verbStem.slice(0, -1) + "ies";
  }
  return verbStem + "s";
}

/** Template a hypothesis sentence: `<subject> [not] <predicate>s <object>`. */
export function renderHypothesis(
  subject: string,
  object: string,
  predicate: string,
  negated: boolean,
): string {
  const verb = thirdPerson(stem(predicate.trim().toLowerCase()));
  const negation = negated ? "not " : "";
  return `${subject} ${negation}${verb} ${object}`;
}
