import type {
  AggregateMatrixResponse,
  MatrixCell,
  TauMatrixResponse,
} from "../types.js";
import { divergingBackground, exact, heatBackground } from "../format.js";

// Every cell carries the payload numbers verbatim: the visible text is
// the mean, the hover title is "(std)", and data attributes hold the
// same strings so nothing is lost to display rounding.
function aggregateCell(cell: MatrixCell | null, source: string): HTMLTableCellElement {
  const td = document.createElement("td");
  if (cell === null) {
    td.className = "no-data";
    td.textContent = "n/a";
    td.title = "no keyword was scorable for this pair";
    return td;
  }
  td.className = "heat-cell";
  td.textContent = exact(cell.mean);
  td.title = `(${exact(cell.std)})`;
  td.dataset.mean = exact(cell.mean);
  td.dataset.std = exact(cell.std);
  td.dataset.n = String(cell.n);
  td.dataset.source = source;
  td.style.backgroundColor = heatBackground(cell.mean, 0, 1);
  return td;
}

function headerRow(corner: string, labels: string[]): HTMLTableRowElement {
  const tr = document.createElement("tr");
  const corner_th = document.createElement("th");
  corner_th.textContent = corner;
  tr.appendChild(corner_th);
  for (const label of labels) {
    const th = document.createElement("th");
    th.scope = "col";
    th.textContent = label;
    tr.appendChild(th);
  }
  return tr;
}

function hoverNote(): HTMLElement {
  const note = document.createElement("p");
  note.className = "view-note";
  note.textContent =
    "cells show the mean over scorable keywords; " +
    "hover a cell to see the standard deviation as (std)";
  return note;
}

export function renderAggregateMatrix(
  container: HTMLElement,
  payload: AggregateMatrixResponse
): void {
  container.textContent = "";
  const heading = document.createElement("h2");
  heading.textContent = `${payload.metric} between collections`;
  container.appendChild(heading);
  container.appendChild(hoverNote());

  const table = document.createElement("table");
  table.className = "matrix-table";
  table.dataset.metric = payload.metric;
  const head = document.createElement("thead");
  head.appendChild(headerRow(payload.metric, payload.labels));
  table.appendChild(head);

  const body = document.createElement("tbody");
  payload.labels.forEach((rowLabel, i) => {
    const tr = document.createElement("tr");
    tr.dataset.row = rowLabel;
    const th = document.createElement("th");
    th.scope = "row";
    th.textContent = rowLabel;
    tr.appendChild(th);
    payload.labels.forEach((colLabel, j) => {
      const cells = payload.cells[i];
      const cell = cells ? cells[j] ?? null : null;
      const td = aggregateCell(cell, payload.metric);
      td.dataset.col = colLabel;
      tr.appendChild(td);
    });
    body.appendChild(tr);
  });
  table.appendChild(body);
  container.appendChild(table);
}

// One table holding both overlap views: jaccard above the diagonal,
// jsd below it, jaccard on the diagonal itself (where it is 1 by
// definition whenever any keyword was scorable).
export function renderCombinedMatrix(
  container: HTMLElement,
  jac: AggregateMatrixResponse,
  jsd: AggregateMatrixResponse
): void {
  container.textContent = "";
  const heading = document.createElement("h2");
  heading.textContent = "jaccard (upper) and jsd (lower) between collections";
  container.appendChild(heading);
  container.appendChild(hoverNote());

  if (jac.labels.join("|") !== jsd.labels.join("|")) {
    const msg = document.createElement("p");
    msg.className = "pair-absent";
    msg.textContent = "matrix payloads disagree on collection labels";
    container.appendChild(msg);
    return;
  }

  const table = document.createElement("table");
  table.className = "matrix-table";
  table.dataset.metric = "combined";
  const head = document.createElement("thead");
  head.appendChild(headerRow("jac \\ jsd", jac.labels));
  table.appendChild(head);

  const body = document.createElement("tbody");
  jac.labels.forEach((rowLabel, i) => {
    const tr = document.createElement("tr");
    tr.dataset.row = rowLabel;
    const th = document.createElement("th");
    th.scope = "row";
    th.textContent = rowLabel;
    tr.appendChild(th);
    jac.labels.forEach((colLabel, j) => {
      const fromJsd = i > j;
      const source = fromJsd ? jsd : jac;
      const cells = source.cells[i];
      const cell = cells ? cells[j] ?? null : null;
      const td = aggregateCell(cell, fromJsd ? "jsd" : "jaccard");
      td.dataset.col = colLabel;
      tr.appendChild(td);
    });
    body.appendChild(tr);
  });
  table.appendChild(body);
  container.appendChild(table);
}

export function renderTauMatrix(
  container: HTMLElement,
  payload: TauMatrixResponse
): void {
  container.textContent = "";
  const heading = document.createElement("h2");
  heading.textContent = "rank correlation against the full collection";
  container.appendChild(heading);
  const note = document.createElement("p");
  note.className = "view-note";
  note.textContent =
    "one row per keyword, one column per decade; " +
    "grayed cells mean the keyword is absent from that decade";
  container.appendChild(note);

  const table = document.createElement("table");
  table.className = "matrix-table tau-table";
  table.dataset.metric = "tau";
  const head = document.createElement("thead");
  head.appendChild(headerRow("keyword", payload.decades));
  table.appendChild(head);

  const body = document.createElement("tbody");
  payload.queries.forEach((keyword, i) => {
    const tr = document.createElement("tr");
    tr.dataset.row = keyword;
    const th = document.createElement("th");
    th.scope = "row";
    th.textContent = keyword;
    tr.appendChild(th);
    payload.decades.forEach((decade, j) => {
      const cells = payload.cells[i];
      const value = cells === undefined ? null : cells[j] ?? null;
      const td = document.createElement("td");
      td.dataset.col = decade;
      if (value === null) {
        td.className = "no-data absent";
        td.textContent = "absent";
      } else {
        td.className = "heat-cell";
        td.textContent = exact(value);
        td.dataset.value = exact(value);
        td.style.backgroundColor = divergingBackground(value);
      }
      tr.appendChild(td);
    });
    body.appendChild(tr);
  });
  table.appendChild(body);
  container.appendChild(table);
}
