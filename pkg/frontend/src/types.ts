// JSON payload shapes of the hypotest HTTP API.

export type Polarity = 1 | -1;

export interface HypothesisJson {
  subject: string;
  object: string;
  predicate: string;
  polarity: Polarity;
  text: string;
}

export interface TestResultJson {
  hypothesis: HypothesisJson;
  observed: number;
  expected: number;
  total: number;
  chi2: number;
  p_value: number;
  decision: "Accepted" | "Rejected";
  alpha: number;
  supporting_doc_ids: string[];
  mode: string;
  match_predicate: boolean;
}

export interface NetworkNodeJson {
  id: string;
  type: string;
  hops: number;
}

export interface NetworkEdgeJson {
  source: string;
  target: string;
  predicate: string;
  polarity: Polarity;
  evidence_count: number;
  doc_ids: string[];
}

export interface SecondaryNetworkJson {
  seeds: string[];
  nodes: NetworkNodeJson[];
  edges: NetworkEdgeJson[];
}

export interface HypothesisResponse {
  result: TestResultJson;
  network: SecondaryNetworkJson;
  rendered_text?: string;
}

export interface EntityJson {
  id: string;
  name: string;
  type: string;
  aliases: string[];
}

export interface EvidenceRowJson {
  doc_id: string;
  title: string;
  sentence_index: number;
  predicate: string;
  polarity: Polarity;
  evidence: string;
}

export interface TextHypothesisRequest {
  text: string;
  expected: number;
  alpha?: number;
  mode?: string;
  match_predicate?: boolean;
}

export interface GraphHypothesisRequest {
  subject: string;
  object: string;
  predicate: string;
  negated: boolean;
  expected: number;
  alpha?: number;
  mode?: string;
  match_predicate?: boolean;
}
