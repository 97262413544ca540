// Interactive secondary-network view: d3 force layout (run synchronously
// for deterministic output), hop-distance filter, node/edge selection that
// feeds the graphical hypothesis builder.

import * as d3 from "d3";

import type { NetworkEdgeJson, Polarity, SecondaryNetworkJson } from "./types";

export interface EdgeSelection {
  source: string;
  target: string;
  predicate: string;
  polarity: Polarity;
}

export interface NetworkViewCallbacks {
  onEdgeSelected: (selection: EdgeSelection) => void;
  onNodesSelected: (nodes: string[]) => void;
}

interface SimNode extends d3.SimulationNodeDatum {
  id: string;
  type: string;
  hops: number;
}

interface SimLink extends d3.SimulationLinkDatum<SimNode> {
  edge: NetworkEdgeJson;
}

const WIDTH = 640;
const HEIGHT = 480;

export class NetworkView {
  private readonly callbacks: NetworkViewCallbacks;
  private readonly slider: HTMLInputElement;
  private readonly sliderLabel: HTMLSpanElement;
  private readonly canvas: HTMLDivElement;
  private network: SecondaryNetworkJson | null = null;
  private selected: { id: string; element: SVGGElement }[] = [];

  constructor(container: HTMLElement, callbacks: NetworkViewCallbacks) {
    this.callbacks = callbacks;

    const controls = document.createElement("div");
    controls.className = "network-controls";
    const label = document.createElement("label");
    label.textContent = "hop filter ";
    this.slider = document.createElement("input");
    this.slider.type = "range";
    this.slider.min = "0";
    this.slider.max = "2";
    this.slider.value = "2";
    this.slider.addEventListener("input", () => this.redraw());
    this.sliderLabel = document.createElement("span");
    this.sliderLabel.className = "hop-value";
    label.appendChild(this.slider);
    label.appendChild(this.sliderLabel);
    controls.appendChild(label);

    this.canvas = document.createElement("div");
    this.canvas.className = "network-canvas";

    container.appendChild(controls);
    container.appendChild(this.canvas);
  }

  render(network: SecondaryNetworkJson): void {
    this.network = network;
    this.selected = [];
    const maxHops = Math.max(0, ...network.nodes.map((n) => n.hops));
    this.slider.max = String(Math.max(1, maxHops));
    this.slider.value = this.slider.max;
    this.redraw();
  }

  hopFilter(): number {
    return Number(this.slider.value);
  }

  setHopFilter(k: number): void {
    this.slider.value = String(k);
    this.redraw();
  }

  selectedNodes(): string[] {
    return this.selected.map((s) => s.id);
  }

  private redraw(): void {
    this.canvas.replaceChildren();
    this.sliderLabel.textContent = ` ≤ ${this.slider.value}`;
    const network = this.network;
    if (network === null) {
      return;
    }
    if (network.edges.length === 0) {
      const placeholder = document.createElement("p");
      placeholder.className = "placeholder";
      placeholder.textContent = "no evidence found";
      this.canvas.appendChild(placeholder);
      return;
    }

    const bound = this.hopFilter();
    const visible = new Set(
      network.nodes.filter((n) => n.hops <= bound).map((n) => n.id),
    );
    const seeds = new Set(network.seeds);
    const nodes: SimNode[] = network.nodes
      .filter((n) => visible.has(n.id))
      .map((n) => ({ ...n }));
    const links: SimLink[] = network.edges
      .filter((e) => visible.has(e.source) && visible.has(e.target))
      .map((e) => ({ source: e.source, target: e.target, edge: e }));

    const simulation = d3
      .forceSimulation(nodes)
      .force(
        "link",
        d3
          .forceLink<SimNode, SimLink>(links)
          .id((d) => d.id)
          .distance(90),
      )
      .force("charge", d3.forceManyBody().strength(-220))
      .force("center", d3.forceCenter(WIDTH / 2, HEIGHT / 2))
      .stop();
    simulation.tick(200);

    const svg = d3
      .select(this.canvas)
      .append("svg")
      .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
      .attr("width", "100%");

    const view = this;
    svg
      .append("g")
      .selectAll("line")
      .data(links)
      .join("line")
      .attr("class", (d) =>
        d.edge.polarity < 0 ? "edge negative" : "edge positive",
      )
      .attr("x1", (d) => (d.source as SimNode).x ?? 0)
      .attr("y1", (d) => (d.source as SimNode).y ?? 0)
      .attr("x2", (d) => (d.target as SimNode).x ?? 0)
      .attr("y2", (d) => (d.target as SimNode).y ?? 0)
      .attr("data-source", (d) => d.edge.source)
      .attr("data-target", (d) => d.edge.target)
      .attr("data-predicate", (d) => d.edge.predicate)
      .attr("data-polarity", (d) => d.edge.polarity)
      .on("click", function (_event, d) {
        view.callbacks.onEdgeSelected({
          source: d.edge.source,
          target: d.edge.target,
          predicate: d.edge.predicate,
          polarity: d.edge.polarity,
        });
      })
      .append("title")
      .text(
        (d) =>
          `${d.edge.predicate} (${d.edge.polarity > 0 ? "+" : "-"}, ` +
          `evidence: ${d.edge.evidence_count})`,
      );

    const nodeGroups = svg
      .append("g")
      .selectAll("g")
      .data(nodes)
      .join("g")
      .attr("class", (d) => (seeds.has(d.id) ? "node seed" : "node"))
      .attr("data-id", (d) => d.id)
      .attr("data-hops", (d) => d.hops)
      .attr("transform", (d) => `translate(${d.x ?? 0},${d.y ?? 0})`)
      .on("click", function (_event, d) {
        view.toggleNode(d.id, this as SVGGElement);
      });

    nodeGroups.append("circle").attr("r", 14);
    nodeGroups
      .append("text")
      .attr("dy", 28)
      .attr("text-anchor", "middle")
      .text((d) => d.id);
    nodeGroups.append("title").text((d) => `${d.id} (${d.type}, hop ${d.hops})`);
  }

  private toggleNode(id: string, element: SVGGElement): void {
    const index = this.selected.findIndex((s) => s.id === id);
    if (index >= 0) {
      this.selected.splice(index, 1);
      element.classList.remove("selected");
    } else {
      this.selected.push({ id, element });
      element.classList.add("selected");
      if (this.selected.length > 2) {
        const dropped = this.selected.shift()!;
        dropped.element.classList.remove("selected");
      }
    }
    this.callbacks.onNodesSelected(this.selectedNodes());
  }
}
