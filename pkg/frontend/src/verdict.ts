// Verdict panel: every displayed number is copied from the server response.

import type { EvidenceRowJson, TestResultJson } from "./types";

export type EvidenceLoader = (
  subject: string,
  object: string,
) => Promise<EvidenceRowJson[]>;

function row(term: string, value: string): HTMLElement {
  const div = document.createElement("div");
  div.className = "stat";
  const dt = document.createElement("span");
  dt.className = "stat-name";
  dt.textContent = term;
  const dd = document.createElement("span");
  dd.className = "stat-value";
  dd.textContent = value;
  div.append(dt, dd);
  return div;
}

export function renderVerdict(
  container: HTMLElement,
  result: TestResultJson,
  loadEvidence: EvidenceLoader,
): void {
  container.replaceChildren();

  const badge = document.createElement("div");
  badge.className =
    result.decision === "Accepted" ? "badge accepted" : "badge rejected";
  badge.textContent = result.decision;
  container.appendChild(badge);

  const sentence = document.createElement("p");
  sentence.className = "tested-text";
  sentence.textContent = result.hypothesis.text;
  container.appendChild(sentence);

  const normal = document.createElement("p");
  normal.className = "normal-form";
  const sign = result.hypothesis.polarity > 0 ? "+1" : "-1";
  normal.textContent =
    `(${result.hypothesis.subject}, ${result.hypothesis.predicate}, ` +
    `${result.hypothesis.object}, ${sign})`;
  container.appendChild(normal);

  const stats = document.createElement("div");
  stats.className = "stats";
  stats.appendChild(row("observed (o)", `${result.observed} / ${result.total}`));
  stats.appendChild(row("expected (e)", String(result.expected)));
  stats.appendChild(row("chi-square", result.chi2.toFixed(6)));
  stats.appendChild(row("p-value", result.p_value.toFixed(3)));
  stats.appendChild(row("alpha", String(result.alpha)));
  stats.appendChild(row("mode", result.mode));
  container.appendChild(stats);

  const details = document.createElement("details");
  details.className = "evidence";
  const summary = document.createElement("summary");
  summary.textContent = `supporting documents (${result.supporting_doc_ids.length})`;
  details.appendChild(summary);
  const list = document.createElement("ul");
  list.className = "evidence-list";
  for (const docId of result.supporting_doc_ids) {
    const item = document.createElement("li");
    item.textContent = docId;
    item.dataset.docId = docId;
    list.appendChild(item);
  }
  details.appendChild(list);
  container.appendChild(details);

  // evidence sentences load lazily, once, when the section is expanded
  let loaded = false;
  details.addEventListener("toggle", () => {
    if (!details.open || loaded) {
      return;
    }
    loaded = true;
    void loadEvidence(result.hypothesis.subject, result.hypothesis.object)
      .then((rows) => {
        const byDoc = new Map<string, EvidenceRowJson[]>();
        for (const evidenceRow of rows) {
          const bucket = byDoc.get(evidenceRow.doc_id) ?? [];
          bucket.push(evidenceRow);
          byDoc.set(evidenceRow.doc_id, bucket);
        }
        for (const item of list.querySelectorAll("li")) {
          const docRows = byDoc.get(item.dataset.docId ?? "") ?? [];
          for (const evidenceRow of docRows) {
            const quote = document.createElement("blockquote");
            quote.textContent = evidenceRow.evidence;
            item.appendChild(quote);
          }
        }
      })
      .catch(() => {
        loaded = false; // allow retry on next expand
      });
  });
}
