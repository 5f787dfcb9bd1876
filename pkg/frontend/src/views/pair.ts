import type { CompareResponse } from "../types.js";
import { exact } from "../format.js";

interface ScoredCompare extends CompareResponse {
  jaccard: number;
  jsd: number;
  tau: number;
  overlap_terms: string[];
  a_only: string[];
  b_only: string[];
}

function hasMetrics(payload: CompareResponse): payload is ScoredCompare {
  return (
    typeof payload.jaccard === "number" &&
    typeof payload.jsd === "number" &&
    typeof payload.tau === "number" &&
    Array.isArray(payload.overlap_terms) &&
    Array.isArray(payload.a_only) &&
    Array.isArray(payload.b_only)
  );
}

function termSet(title: string, cls: string, terms: string[]): HTMLElement {
  const section = document.createElement("section");
  section.className = `term-set ${cls}`;
  const h = document.createElement("h3");
  h.textContent = `${title} (${terms.length})`;
  section.appendChild(h);
  const body = document.createElement("p");
  for (const term of terms) {
    const span = document.createElement("span");
    span.className = "term";
    span.textContent = term;
    body.appendChild(span);
  }
  section.appendChild(body);
  return section;
}

export function renderPairView(
  container: HTMLElement,
  payload: CompareResponse
): void {
  container.textContent = "";

  const heading = document.createElement("h2");
  heading.textContent = `"${payload.q}": ${payload.a} vs ${payload.b}`;
  container.appendChild(heading);

  if (payload.a_absent || payload.b_absent) {
    const sides = [];
    if (payload.a_absent) {
      sides.push(payload.a);
    }
    if (payload.b_absent) {
      sides.push(payload.b);
    }
    const msg = document.createElement("p");
    msg.className = "pair-absent";
    msg.textContent =
      `"${payload.q}" is absent from ${sides.join(" and ")}, ` +
      "so there is nothing to compare; absence is the finding here";
    container.appendChild(msg);
    return;
  }
  if (!hasMetrics(payload)) {
    const msg = document.createElement("p");
    msg.className = "pair-absent";
    msg.textContent = "comparison payload is incomplete";
    container.appendChild(msg);
    return;
  }

  // Values are printed exactly as received; see format.exact.
  const chips = document.createElement("div");
  chips.className = "metric-chips";
  const metrics: Array<[string, number]> = [
    ["jaccard", payload.jaccard],
    ["jsd", payload.jsd],
    ["tau", payload.tau],
  ];
  for (const [name, value] of metrics) {
    const chip = document.createElement("span");
    chip.className = "metric-chip";
    chip.dataset.metric = name;
    chip.dataset.value = exact(value);
    const label = document.createElement("span");
    label.className = "metric-name";
    label.textContent = name;
    const num = document.createElement("strong");
    num.className = "metric-value";
    num.textContent = exact(value);
    chip.appendChild(label);
    chip.appendChild(num);
    chips.appendChild(chip);
  }
  container.appendChild(chips);

  container.appendChild(termSet("shared", "overlap", payload.overlap_terms));
  container.appendChild(
    termSet(`only in ${payload.a}`, "a-only", payload.a_only)
  );
  container.appendChild(
    termSet(`only in ${payload.b}`, "b-only", payload.b_only)
  );
}
