// Shared fixtures and a fetch mock that impersonates the hypotest API.

import { vi } from "vitest";

import type {
  EvidenceRowJson,
  HypothesisResponse,
  SecondaryNetworkJson,
  TestResultJson,
} from "../src/types";

export const ROW1_NETWORK: SecondaryNetworkJson = {
  seeds: ["carvedilol", "weight_gain"],
  nodes: [
    { id: "carvedilol", type: "drug", hops: 0 },
    { id: "weight_gain", type: "disease", hops: 0 },
    { id: "hypertension", type: "disease", hops: 1 },
    { id: "propranolol", type: "drug", hops: 2 },
  ],
  edges: [
    {
      source: "carvedilol",
      target: "weight_gain",
      predicate: "cause",
      polarity: -1,
      evidence_count: 18,
      doc_ids: Array.from({ length: 18 }, (_, i) => `s${i + 1}`),
    },
    {
      source: "carvedilol",
      target: "hypertension",
      predicate: "treat",
      polarity: 1,
      evidence_count: 2,
      doc_ids: ["s21", "s22"],
    },
    {
      source: "hypertension",
      target: "propranolol",
      predicate: "treat",
      polarity: 1,
      evidence_count: 1,
      doc_ids: ["s23"],
    },
  ],
};

export const ROW1_RESULT: TestResultJson = {
  hypothesis: {
    subject: "carvedilol",
    object: "weight_gain",
    predicate: "cause",
    polarity: -1,
    text: "Carvedilol not causes Weight Gain",
  },
  observed: 18,
  expected: 15,
  total: 25,
  chi2: 0.6,
  p_value: 0.43857802608100005,
  decision: "Accepted",
  alpha: 0.05,
  supporting_doc_ids: Array.from({ length: 18 }, (_, i) => `s${i + 1}`),
  mode: "strict",
  match_predicate: false,
};

export const ROW1_RESPONSE: HypothesisResponse = {
  result: ROW1_RESULT,
  network: ROW1_NETWORK,
};

export const EVIDENCE_ROWS: EvidenceRowJson[] = [
  {
    doc_id: "s1",
    title: "synthetic paper 1",
    sentence_index: 0,
    predicate: "cause",
    polarity: -1,
    evidence: "Carvedilol not causes Weight Gain.",
  },
];

export interface FetchLog {
  calls: { url: string; body: unknown }[];
}

/** Install a fetch mock routing the API endpoints to canned responses. */
export function mockApi(
  overrides: Partial<Record<string, unknown>> = {},
): FetchLog {
  const log: FetchLog = { calls: [] };
  const routes: Record<string, unknown> = {
    "POST /api/hypothesis": ROW1_RESPONSE,
    "POST /api/hypothesis/graph": {
      ...ROW1_RESPONSE,
      rendered_text: "Carvedilol not causes Weight Gain",
    },
    "GET /api/entities": [],
    "GET /api/evidence": EVIDENCE_ROWS,
    ...overrides,
  };
  vi.stubGlobal(
    "fetch",
    vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
      const url = String(input);
      const method = init?.method ?? "GET";
      const path = url.split("?")[0];
      const key = `${method} ${path}`;
      log.calls.push({
        url,
        body: init?.body ? JSON.parse(String(init.body)) : null,
      });
      const payload = routes[key];
      if (payload === undefined) {
        return new Response(
          JSON.stringify({ code: "not_found", message: `no route ${key}` }),
          { status: 404, headers: { "Content-Type": "application/json" } },
        );
      }
      if (payload instanceof Response) {
        return payload.clone();
      }
      return new Response(JSON.stringify(payload), {
        status: 200,
        headers: { "Content-Type": "application/json" },
      });
    }),
  );
  return log;
}

export function errorResponse(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}
