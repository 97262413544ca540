// Application wiring: forms -> API -> verdict + network -> click-to-refine.
//
// One hypothesis request is in flight at a time (submit buttons disable
// while pending); every entry in the history panel can be re-submitted
// verbatim.

import {
  ApiError,
  fetchEvidence,
  submitGraphHypothesis,
  submitTextHypothesis,
} from "./api";
import {
  GraphHypothesisForm,
  TestSettings,
  TextHypothesisForm,
} from "./forms";
import { HistoryRequest, SessionHistory } from "./history";
import { EdgeSelection, NetworkView } from "./network";
import type { HypothesisResponse } from "./types";
import { renderVerdict } from "./verdict";

function section(title: string, className: string): HTMLElement {
  const element = document.createElement("section");
  element.className = className;
  const heading = document.createElement("h2");
  heading.textContent = title;
  element.appendChild(heading);
  return element;
}

export interface App {
  readonly history: SessionHistory;
  readonly network: NetworkView;
  readonly textForm: TextHypothesisForm;
  readonly graphForm: GraphHypothesisForm;
  readonly settings: TestSettings;
  /** Resolves when the current request/render cycle has settled. */
  whenIdle(): Promise<void>;
}

export function mountApp(root: HTMLElement): App {
  const history = new SessionHistory();
  let pending: Promise<void> = Promise.resolve();
  let inFlight = false;

  root.replaceChildren();
  const header = document.createElement("header");
  const title = document.createElement("h1");
  title.textContent = "HypoTest";
  const tagline = document.createElement("p");
  tagline.textContent =
    "Test a biological hypothesis against the mined literature, " +
    "then explore the surrounding relation network.";
  header.append(title, tagline);
  root.appendChild(header);

  const inputSection = section("1. Pose a hypothesis", "panel input-panel");
  const verdictSection = section("2. Verdict", "panel verdict-panel");
  const networkSection = section("3. Secondary network", "panel network-panel");
  const historySection = section("Session history", "panel history-panel");

  const verdictBody = document.createElement("div");
  verdictBody.className = "verdict-body";
  verdictBody.textContent = "no hypothesis tested yet";
  verdictSection.appendChild(verdictBody);

  const networkHint = document.createElement("p");
  networkHint.className = "hint";
  networkHint.textContent =
    "click an edge to turn it into the next hypothesis; " +
    "click two nodes to start from a bare pair";
  networkSection.appendChild(networkHint);
  const networkBody = document.createElement("div");
  networkSection.appendChild(networkBody);

  const historyList = document.createElement("ol");
  historyList.className = "history-list";
  historySection.appendChild(historyList);

  const settings = new TestSettings();

  const setBusy = (busy: boolean) => {
    inFlight = busy;
    textForm.submitButton.disabled = busy;
    graphForm.submitButton.disabled = busy;
  };

  const showResponse = (
    response: HypothesisResponse,
    request: HistoryRequest,
  ) => {
    renderVerdict(verdictBody, response.result, fetchEvidence);
    networkView.render(response.network);
    const entry = history.add(
      response.result.hypothesis.text,
      request,
      response.result,
    );
    const item = document.createElement("li");
    const label = document.createElement("span");
    label.textContent =
      `${entry.text} — ${entry.result.decision} ` +
      `(p=${entry.result.p_value.toFixed(3)})`;
    const rerun = document.createElement("button");
    rerun.type = "button";
    rerun.textContent = "re-run";
    rerun.addEventListener("click", () => resubmit(entry.request));
    item.append(label, rerun);
    historyList.appendChild(item);
  };

  const surfaceError = (error: unknown, form: { showError(m: string): void }) => {
    if (error instanceof ApiError) {
      const found = error.payload.entities_found;
      const suffix =
        found !== undefined ? ` (entities matched: [${found.join(", ")}])` : "";
      form.showError(`${error.payload.code}: ${error.payload.message}${suffix}`);
    } else {
      form.showError(String(error));
    }
  };

  const run = (work: () => Promise<void>) => {
    if (inFlight) {
      return;
    }
    setBusy(true);
    pending = work().finally(() => setBusy(false));
  };

  const submitText = (body: Parameters<typeof submitTextHypothesis>[0]) => {
    run(async () => {
      try {
        const response = await submitTextHypothesis(body);
        showResponse(response, { kind: "text", body });
      } catch (error) {
        surfaceError(error, textForm);
      }
    });
  };

  const submitGraph = (body: Parameters<typeof submitGraphHypothesis>[0]) => {
    run(async () => {
      try {
        const response = await submitGraphHypothesis(body);
        showResponse(response, { kind: "graph", body });
      } catch (error) {
        surfaceError(error, graphForm);
      }
    });
  };

  const resubmit = (request: HistoryRequest) => {
    if (request.kind === "text") {
      submitText(request.body);
    } else {
      submitGraph(request.body);
    }
  };

  const textForm = new TextHypothesisForm(settings, submitText);
  const graphForm = new GraphHypothesisForm(settings, submitGraph);

  const onEdgeSelected = (selection: EdgeSelection) => {
    graphForm.prefill({
      subject: selection.source,
      object: selection.target,
      predicate: selection.predicate,
      negated: selection.polarity < 0,
    });
    graphForm.element.scrollIntoView?.({ behavior: "smooth" });
  };

  const onNodesSelected = (nodes: string[]) => {
    if (nodes.length === 1) {
      graphForm.showError("pick a second node to build a hypothesis");
      return;
    }
    if (nodes.length === 2) {
      graphForm.showError("");
      graphForm.prefill({
        subject: nodes[0],
        object: nodes[1],
        predicate: "",
        negated: false,
      });
    }
  };

  const networkView = new NetworkView(networkBody, {
    onEdgeSelected,
    onNodesSelected,
  });

  inputSection.appendChild(settings.element);
  const columns = document.createElement("div");
  columns.className = "form-columns";
  const textColumn = document.createElement("div");
  const textTitle = document.createElement("h3");
  textTitle.textContent = "Textual input";
  textColumn.append(textTitle, textForm.element);
  const graphColumn = document.createElement("div");
  const graphTitle = document.createElement("h3");
  graphTitle.textContent = "Graphical input";
  graphColumn.append(graphTitle, graphForm.element);
  columns.append(textColumn, graphColumn);
  inputSection.appendChild(columns);

  root.append(inputSection, verdictSection, networkSection, historySection);

  return {
    history,
    network: networkView,
    textForm,
    graphForm,
    settings,
    whenIdle: () => pending,
  };
}
