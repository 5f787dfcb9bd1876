import type { ExpandResponse } from "../types.js";
import { exact } from "../format.js";

// A term is emphasized when it appears in the expansion of at least
// two of the rows currently on screen.  The sets come straight from
// the service payloads; nothing is recomputed here.
export function sharedTerms(rows: ExpandResponse[]): Set<string> {
  const counts = new Map<string, number>();
  for (const row of rows) {
    if (row.absent) {
      continue;
    }
    const seen = new Set<string>();
    for (const { term } of row.terms) {
      if (!seen.has(term)) {
        seen.add(term);
        counts.set(term, (counts.get(term) ?? 0) + 1);
      }
    }
  }
  const shared = new Set<string>();
  for (const [term, n] of counts) {
    if (n >= 2) {
      shared.add(term);
    }
  }
  return shared;
}

export function renderTermsView(
  container: HTMLElement,
  keyword: string,
  rows: ExpandResponse[]
): void {
  container.textContent = "";

  const heading = document.createElement("h2");
  heading.textContent = `expansion terms for "${keyword}"`;
  container.appendChild(heading);

  const note = document.createElement("p");
  note.className = "view-note";
  note.textContent =
    "bold terms appear in more than one of the rows below; " +
    "grayed rows mean the keyword is absent from that collection";
  container.appendChild(note);

  const shared = sharedTerms(rows);
  const table = document.createElement("table");
  table.className = "terms-table";
  const body = document.createElement("tbody");

  for (const row of rows) {
    const tr = document.createElement("tr");
    tr.className = row.absent ? "collection-row absent-row" : "collection-row";
    tr.dataset.collection = row.collection;

    const th = document.createElement("th");
    th.scope = "row";
    th.textContent = row.collection;
    tr.appendChild(th);

    const td = document.createElement("td");
    if (row.absent) {
      td.className = "absent-note";
      td.textContent = "absent from this collection";
    } else {
      for (const { term, weight } of row.terms) {
        const span = document.createElement("span");
        span.className = shared.has(term) ? "term shared" : "term";
        span.textContent = term;
        span.title = `weight ${exact(weight)}`;
        span.dataset.weight = exact(weight);
        td.appendChild(span);
      }
    }
    tr.appendChild(td);
    body.appendChild(tr);
  }

  table.appendChild(body);
  container.appendChild(table);
}
