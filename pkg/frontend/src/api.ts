// Thin fetch client. Every number displayed by the UI originates from
// these responses; nothing statistical is computed in the browser.

import type {
  EntityJson,
  EvidenceRowJson,
  GraphHypothesisRequest,
  HypothesisResponse,
  TextHypothesisRequest,
} from "./types";

export interface ApiErrorPayload {
  code: string;
  message: string;
  entities_found?: string[];
  [key: string]: unknown;
}

export class ApiError extends Error {
  readonly status: number;
  readonly payload: ApiErrorPayload;

  constructor(status: number, payload: ApiErrorPayload) {
    super(payload.message ?? `request failed with status ${status}`);
    this.status = status;
    this.payload = payload;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, init);
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    body = null;
  }
  if (!response.ok) {
    const payload =
      body && typeof body === "object"
        ? (body as ApiErrorPayload)
        : { code: "http_error", message: `status ${response.status}` };
    throw new ApiError(response.status, payload);
  }
  return body as T;
}

function post<T>(path: string, body: unknown): Promise<T> {
  return request<T>(path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
}

export function submitTextHypothesis(
  body: TextHypothesisRequest,
): Promise<HypothesisResponse> {
  return post("/api/hypothesis", body);
}

export function submitGraphHypothesis(
  body: GraphHypothesisRequest,
): Promise<HypothesisResponse> {
  return post("/api/hypothesis/graph", body);
}

export function searchEntities(query: string): Promise<EntityJson[]> {
  return request(`/api/entities?q=${encodeURIComponent(query)}`);
}

export function fetchEvidence(
  first: string,
  second: string,
): Promise<EvidenceRowJson[]> {
  const params = new URLSearchParams();
  params.append("entity", first);
  params.append("entity", second);
  return request(`/api/evidence?${params.toString()}`);
}
