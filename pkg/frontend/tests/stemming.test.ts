import { describe, expect, it } from "vitest";

import { renderHypothesis, stem } from "../src/stemming";

describe("stem", () => {
  it("matches the server's normalization on common verbs", () => {
    expect(stem("causes")).toBe("cause");
    expect(stem("binding")).toBe("bind");
    expect(stem("inhibited")).toBe("inhibit");
    expect(stem("suppresses")).toBe("suppress");
    expect(stem("carries")).toBe("carry");
    expect(stem("cure")).toBe("cure");
  });
});

describe("renderHypothesis", () => {
  it("templates the positive form", () => {
    expect(renderHypothesis("A", "B", "inhibit", false)).toBe("A inhibits B");
  });

  it("matches the negated phrasing used by the server", () => {
    expect(renderHypothesis("Carvedilol", "Weight Gain", "cause", true)).toBe(
      "Carvedilol not causes Weight Gain",
    );
  });

  it("falls back to the stemmed form for free-text predicates", () => {
    expect(renderHypothesis("A", "B", "causes", false)).toBe("A causes B");
    expect(renderHypothesis("A", "B", "binding", false)).toBe("A binds B");
    expect(renderHypothesis("A", "B", "carry", false)).toBe("A carries B");
  });
});
