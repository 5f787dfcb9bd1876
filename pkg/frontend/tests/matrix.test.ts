// UI tests for the matrix view against a stubbed service.  The core
// contract: every visible mean and every hover std is the payload
// number verbatim (String() of a double round-trips its bits), each
// metric is fetched at most once, and unsupported metrics disable
// their controls instead of breaking the view.

import { beforeEach, describe, expect, it } from "vitest";
import type { MatrixCell } from "../src/types.js";
import {
  defaultRoutes,
  jaccardMatrixFixture,
  jsdMatrixFixture,
  tauMatrixFixture,
  LABELS,
} from "./fixtures.js";
import {
  clickTab,
  httpError,
  mountWithRoutes,
  pickMetric,
  type Mounted,
} from "./helpers.js";

beforeEach(() => {
  document.body.innerHTML = "";
});

async function mountOnMatrix(): Promise<Mounted> {
  const mounted = await mountWithRoutes(defaultRoutes());
  clickTab(mounted.root, "matrix");
  await mounted.app.lastWork;
  return mounted;
}

function cellAt(root: HTMLElement, row: string, col: string): HTMLElement {
  const td = root.querySelector<HTMLElement>(
    `.matrix-table tr[data-row="${row}"] td[data-col="${col}"]`
  );
  if (!td) {
    throw new Error(`no cell at ${row} x ${col}`);
  }
  return td;
}

function expectVerbatim(td: HTMLElement, cell: MatrixCell): void {
  expect(td.classList.contains("heat-cell")).toBe(true);
  expect(td.textContent).toBe(String(cell.mean));
  expect(td.title).toBe(`(${String(cell.std)})`);
  // data attributes round-trip to the identical doubles
  expect(Object.is(Number(td.dataset.mean), cell.mean)).toBe(true);
  expect(Object.is(Number(td.dataset.std), cell.std)).toBe(true);
  expect(td.dataset.n).toBe(String(cell.n));
}

describe("matrix view", () => {
  it("renders every jaccard cell exactly as the payload says", async () => {
    const { root } = await mountOnMatrix();
    const payload = jaccardMatrixFixture();
    LABELS.forEach((row, i) => {
      LABELS.forEach((col, j) => {
        const cell = payload.cells[i]![j]!;
        expectVerbatim(cellAt(root, row, col), cell);
      });
    });
    // the diagonal of the overlap matrix is 1 and shows as a bare "1"
    expect(cellAt(root, "FULL", "FULL").textContent).toBe("1");
  });

  it("marks pairs without scorable keywords instead of faking zeros", async () => {
    const { app, root } = await mountOnMatrix();
    pickMetric(root, "jsd");
    await app.lastWork;

    const empty = cellAt(root, "1840s", "FULL");
    expect(empty.classList.contains("no-data")).toBe(true);
    expect(empty.textContent).toBe("n/a");

    const present = cellAt(root, "1890s", "FULL");
    expectVerbatim(present, jsdMatrixFixture().cells[1]![2]!);
  });

  it("fetches each metric once no matter how often it is re-selected", async () => {
    const { app, root, service } = await mountOnMatrix();
    const metricsFetched = () =>
      service.callsTo("/api/matrix").map((c) => c.params.get("metric"));

    expect(metricsFetched()).toEqual(["jaccard"]);
    pickMetric(root, "jsd");
    await app.lastWork;
    expect(metricsFetched()).toEqual(["jaccard", "jsd"]);
    pickMetric(root, "jaccard");
    await app.lastWork;
    expect(metricsFetched()).toEqual(["jaccard", "jsd"]);
    pickMetric(root, "combined");
    await app.lastWork;
    expect(metricsFetched()).toEqual(["jaccard", "jsd"]);
    pickMetric(root, "tau");
    await app.lastWork;
    expect(metricsFetched()).toEqual(["jaccard", "jsd", "tau"]);
  });

  it("lays the combined triangle out as jaccard above, jsd below", async () => {
    const { app, root } = await mountOnMatrix();
    pickMetric(root, "combined");
    await app.lastWork;

    const jac = jaccardMatrixFixture();
    const jsd = jsdMatrixFixture();

    const upper = cellAt(root, "1840s", "1890s");
    expectVerbatim(upper, jac.cells[0]![1]!);
    expect(upper.dataset.source).toBe("jaccard");

    const lower = cellAt(root, "1890s", "1840s");
    expectVerbatim(lower, jsd.cells[1]![0]!);
    expect(lower.dataset.source).toBe("jsd");

    // diagonal comes from jaccard, so it reads 1
    expect(cellAt(root, "1890s", "1890s").textContent).toBe("1");
    expect(cellAt(root, "1890s", "1890s").dataset.source).toBe("jaccard");

    // the missing jsd pair stays blank below the diagonal only
    expect(cellAt(root, "FULL", "1840s").classList.contains("no-data")).toBe(
      true
    );
    expectVerbatim(cellAt(root, "1840s", "FULL"), jac.cells[0]![2]!);
  });

  it("shows the rank correlation grid with absences kept visible", async () => {
    const { app, root } = await mountOnMatrix();
    pickMetric(root, "tau");
    await app.lastWork;

    const payload = tauMatrixFixture();
    const first = cellAt(root, "meteor", "1840s");
    expect(first.textContent).toBe(String(payload.cells[0]![0]));
    expect(Object.is(Number(first.dataset.value), payload.cells[0]![0])).toBe(
      true
    );

    const absent = cellAt(root, "vampire", "1840s");
    expect(absent.classList.contains("absent")).toBe(true);
    expect(absent.textContent).toBe("absent");

    expect(cellAt(root, "vampire", "1890s").textContent).toBe("0.875");
  });

  it("disables the control for a metric the service refuses", async () => {
    const routes = defaultRoutes();
    const plainMatrix = routes.matrix;
    routes.matrix = (metric) =>
      metric === "tau"
        ? httpError(400, "bad_request", "unknown metric 'tau'")
        : plainMatrix(metric);
    const mounted = await mountWithRoutes(routes);
    clickTab(mounted.root, "matrix");
    await mounted.app.lastWork;

    pickMetric(mounted.root, "tau");
    await mounted.app.lastWork;

    const banner = mounted.root.querySelector<HTMLElement>("#banner");
    expect(banner?.classList.contains("hidden")).toBe(false);
    expect(banner?.textContent).toContain("bad_request");

    const tauRadio = mounted.root.querySelector<HTMLInputElement>(
      '#matrix-controls input[value="tau"]'
    );
    expect(tauRadio?.disabled).toBe(true);
    // combined only needs jaccard and jsd, so it stays usable
    const combinedRadio = mounted.root.querySelector<HTMLInputElement>(
      '#matrix-controls input[value="combined"]'
    );
    expect(combinedRadio?.disabled).toBe(false);
  });
});
