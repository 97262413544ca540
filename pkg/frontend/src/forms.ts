// Hypothesis input: shared test settings, the free-text form, and the
// graphical builder with entity autocomplete and a live sentence preview.

import { searchEntities } from "./api";
import { renderHypothesis } from "./stemming";
import type { GraphHypothesisRequest, TextHypothesisRequest } from "./types";

function field(labelText: string, input: HTMLElement, help?: string): HTMLElement {
  const wrapper = document.createElement("label");
  wrapper.className = "field";
  const caption = document.createElement("span");
  caption.textContent = labelText;
  wrapper.append(caption, input);
  if (help) {
    const hint = document.createElement("small");
    hint.textContent = help;
    wrapper.appendChild(hint);
  }
  return wrapper;
}

export class TestSettings {
  readonly element: HTMLElement;
  private readonly expectedInput: HTMLInputElement;
  private readonly alphaInput: HTMLInputElement;

  constructor() {
    this.element = document.createElement("fieldset");
    this.element.className = "settings";
    const legend = document.createElement("legend");
    legend.textContent = "Test settings";
    this.element.appendChild(legend);

    this.expectedInput = document.createElement("input");
    this.expectedInput.type = "number";
    this.expectedInput.step = "any";
    this.expectedInput.min = "0";
    this.expectedInput.name = "expected";
    this.expectedInput.required = true;
    this.element.appendChild(
      field(
        "expected frequency (e)",
        this.expectedInput,
        "number of papers you expect to support the hypothesis; " +
          "the chi-square test compares the observed count against it",
      ),
    );

    this.alphaInput = document.createElement("input");
    this.alphaInput.type = "number";
    this.alphaInput.step = "any";
    this.alphaInput.name = "alpha";
    this.alphaInput.value = "0.05";
    this.element.appendChild(
      field("significance level (alpha)", this.alphaInput),
    );
  }

  expected(): number {
    return Number(this.expectedInput.value);
  }

  alpha(): number {
    return Number(this.alphaInput.value);
  }

  /** Inline validation; returns an error message or null when valid. */
  validate(): string | null {
    if (this.expectedInput.value.trim() === "") {
      return "expected frequency is required";
    }
    if (!(this.expected() > 0)) {
      return "expected frequency must be positive";
    }
    if (!(this.alpha() > 0 && this.alpha() < 1)) {
      return "alpha must lie strictly between 0 and 1";
    }
    return null;
  }

  setExpected(value: number): void {
    this.expectedInput.value = String(value);
  }
}

export class TextHypothesisForm {
  readonly element: HTMLFormElement;
  private readonly textInput: HTMLInputElement;
  private readonly errorBox: HTMLElement;
  readonly submitButton: HTMLButtonElement;

  constructor(
    settings: TestSettings,
    onSubmit: (body: TextHypothesisRequest) => void,
  ) {
    this.element = document.createElement("form");
    this.element.className = "text-form";
    this.element.noValidate = true;

    this.textInput = document.createElement("input");
    this.textInput.type = "text";
    this.textInput.name = "hypothesis";
    this.textInput.placeholder = "Carvedilol not causes Weight Gain";
    this.element.appendChild(field("hypothesis sentence", this.textInput));

    this.submitButton = document.createElement("button");
    this.submitButton.type = "submit";
    this.submitButton.textContent = "Test hypothesis";
    this.element.appendChild(this.submitButton);

    this.errorBox = document.createElement("p");
    this.errorBox.className = "error";
    this.element.appendChild(this.errorBox);

    this.element.addEventListener("submit", (event) => {
      event.preventDefault();
      this.errorBox.textContent = "";
      const text = this.textInput.value.trim();
      if (!text) {
        this.errorBox.textContent = "enter a hypothesis sentence first";
        return; // no request leaves the browser
      }
      const settingsError = settings.validate();
      if (settingsError) {
        this.errorBox.textContent = settingsError;
        return;
      }
      onSubmit({ text, expected: settings.expected(), alpha: settings.alpha() });
    });
  }

  setText(text: string): void {
    this.textInput.value = text;
  }

  showError(message: string): void {
    this.errorBox.textContent = message;
  }
}

export interface GraphFormPrefill {
  subject?: string;
  object?: string;
  predicate?: string;
  negated?: boolean;
}

export class GraphHypothesisForm {
  readonly element: HTMLFormElement;
  private readonly subjectInput: HTMLInputElement;
  private readonly objectInput: HTMLInputElement;
  private readonly predicateInput: HTMLInputElement;
  private readonly negatedInput: HTMLInputElement;
  private readonly preview: HTMLElement;
  private readonly errorBox: HTMLElement;
  readonly submitButton: HTMLButtonElement;

  constructor(
    settings: TestSettings,
    onSubmit: (body: GraphHypothesisRequest) => void,
  ) {
    this.element = document.createElement("form");
    this.element.className = "graph-form";
    this.element.noValidate = true;

    const datalist = document.createElement("datalist");
    datalist.id = "entity-suggestions";
    this.element.appendChild(datalist);

    const autocomplete = (input: HTMLInputElement) => {
      input.setAttribute("list", datalist.id);
      input.addEventListener("input", () => {
        this.refreshPreview();
        const query = input.value.trim();
        if (query.length < 2) {
          return;
        }
        void searchEntities(query)
          .then((entities) => {
            datalist.replaceChildren(
              ...entities.map((entity) => {
                const option = document.createElement("option");
                option.value = entity.name;
                option.label = `${entity.id} (${entity.type})`;
                return option;
              }),
            );
          })
          .catch(() => undefined);
      });
    };

    this.subjectInput = document.createElement("input");
    this.subjectInput.name = "subject";
    autocomplete(this.subjectInput);
    this.element.appendChild(field("subject entity", this.subjectInput));

    this.predicateInput = document.createElement("input");
    this.predicateInput.name = "predicate";
    this.predicateInput.placeholder = "cause, inhibit, bind, ...";
    this.predicateInput.addEventListener("input", () => this.refreshPreview());
    this.element.appendChild(field("predicate", this.predicateInput));

    this.objectInput = document.createElement("input");
    this.objectInput.name = "object";
    autocomplete(this.objectInput);
    this.element.appendChild(field("object entity", this.objectInput));

    this.negatedInput = document.createElement("input");
    this.negatedInput.type = "checkbox";
    this.negatedInput.name = "negated";
    this.negatedInput.addEventListener("change", () => this.refreshPreview());
    this.element.appendChild(field("negated", this.negatedInput));

    this.preview = document.createElement("p");
    this.preview.className = "preview";
    this.element.appendChild(this.preview);

    this.submitButton = document.createElement("button");
    this.submitButton.type = "submit";
    this.submitButton.textContent = "Test built hypothesis";
    this.element.appendChild(this.submitButton);

    this.errorBox = document.createElement("p");
    this.errorBox.className = "error";
    this.element.appendChild(this.errorBox);

    this.element.addEventListener("submit", (event) => {
      event.preventDefault();
      this.errorBox.textContent = "";
      const subject = this.subjectInput.value.trim();
      const object = this.objectInput.value.trim();
      const predicate = this.predicateInput.value.trim();
      if (!subject || !object) {
        this.errorBox.textContent = "pick both a subject and an object entity";
        return;
      }
      if (subject.toLowerCase() === object.toLowerCase()) {
        this.errorBox.textContent = "subject and object must differ";
        return;
      }
      if (!predicate) {
        this.errorBox.textContent = "pick a predicate verb";
        return;
      }
      const settingsError = settings.validate();
      if (settingsError) {
        this.errorBox.textContent = settingsError;
        return;
      }
      onSubmit({
        subject,
        object,
        predicate,
        negated: this.negatedInput.checked,
        expected: settings.expected(),
        alpha: settings.alpha(),
      });
    });

    this.refreshPreview();
  }

  prefill(values: GraphFormPrefill): void {
    if (values.subject !== undefined) {
      this.subjectInput.value = values.subject;
    }
    if (values.object !== undefined) {
      this.objectInput.value = values.object;
    }
    if (values.predicate !== undefined) {
      this.predicateInput.value = values.predicate;
    }
    if (values.negated !== undefined) {
      this.negatedInput.checked = values.negated;
    }
    this.refreshPreview();
  }

  values(): GraphFormPrefill {
    return {
      subject: this.subjectInput.value,
      object: this.objectInput.value,
      predicate: this.predicateInput.value,
      negated: this.negatedInput.checked,
    };
  }

  previewText(): string {
    return this.preview.textContent ?? "";
  }

  showError(message: string): void {
    this.errorBox.textContent = message;
  }

  private refreshPreview(): void {
    const subject = this.subjectInput.value.trim() || "<subject>";
    const object = this.objectInput.value.trim() || "<object>";
    const predicate = this.predicateInput.value.trim() || "relate";
    this.preview.textContent = renderHypothesis(
      subject,
      object,
      predicate,
      this.negatedInput.checked,
    );
  }
}
