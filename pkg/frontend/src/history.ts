// Session history: append-only within the page's lifetime; every entry
// keeps the exact request so it can be re-submitted verbatim.

import type {
  GraphHypothesisRequest,
  TestResultJson,
  TextHypothesisRequest,
} from "./types";

export type HistoryRequest =
  | { kind: "text"; body: TextHypothesisRequest }
  | { kind: "graph"; body: GraphHypothesisRequest };

export interface HistoryEntry {
  readonly id: number;
  readonly text: string;
  readonly request: HistoryRequest;
  readonly result: TestResultJson;
  readonly timestamp: string;
}

export class SessionHistory {
  private entries: HistoryEntry[] = [];
  private nextId = 1;

  add(text: string, request: HistoryRequest, result: TestResultJson): HistoryEntry {
    const entry: HistoryEntry = {
      id: this.nextId++,
      text,
      request,
      result,
      timestamp: new Date().toISOString(),
    };
    this.entries.push(entry);
    return entry;
  }

  all(): readonly HistoryEntry[] {
    return this.entries;
  }

  get length(): number {
    return this.entries.length;
  }
}
