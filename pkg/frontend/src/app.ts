import { ApiClient, ApiError, RequestGate } from "./api.js";
import {
  createState,
  setKeyword,
  setTopN,
  setView,
  toggleCollection,
  type ExplorerState,
  type MatrixChoice,
  type ViewName,
} from "./state.js";
import type {
  AggregateMatrixResponse,
  CollectionStats,
  MatrixResponse,
  TauMatrixResponse,
} from "./types.js";
import { renderTermsView } from "./views/terms.js";
import { renderPairView } from "./views/pair.js";
import {
  renderAggregateMatrix,
  renderCombinedMatrix,
  renderTauMatrix,
} from "./views/matrix.js";

const VIEWS: ViewName[] = ["terms", "pair", "matrix"];
const METRICS: MatrixChoice[] = ["jaccard", "jsd", "combined", "tau"];

export class App {
  readonly state: ExplorerState;
  // Promise of the most recent event-driven refresh, so callers (and
  // tests) can wait for the DOM to settle after dispatching events.
  lastWork: Promise<void> = Promise.resolve();

  private readonly client: ApiClient;
  private readonly root: HTMLElement;
  private readonly gates = {
    terms: new RequestGate(),
    pair: new RequestGate(),
    matrix: new RequestGate(),
  };
  // Matrix responses are cached as promises keyed by metric name, so a
  // metric is fetched at most once no matter how often the user
  // switches back and forth.
  private readonly matrixCache = new Map<string, Promise<MatrixResponse>>();
  private readonly unavailableMetrics = new Set<string>();

  constructor(root: HTMLElement, client: ApiClient, collections: CollectionStats[]) {
    this.root = root;
    this.client = client;
    this.state = createState(collections.map((c) => c.label));
    this.buildSkeleton(collections);
    this.bindEvents();
    this.syncControls();
    this.renderHint();
  }

  // ===================== skeleton and controls =====================

  private buildSkeleton(collections: CollectionStats[]): void {
    this.root.innerHTML = `
      <header class="topbar">
        <h1>lexidrift explorer</h1>
        <div class="keyword-bar">
          <input id="keyword-input" type="text" list="keyword-history"
                 placeholder="keyword, e.g. telegraph" autocomplete="off">
          <datalist id="keyword-history"></datalist>
          <button id="keyword-go" type="button">expand</button>
        </div>
      </header>
      <div id="banner" class="banner hidden" role="alert"></div>
      <nav class="tabs" id="tabs"></nav>
      <section class="controls">
        <fieldset id="collection-controls">
          <legend>collections</legend>
        </fieldset>
        <label id="topn-control">top n
          <input id="topn-input" type="number" min="1" step="1" value="15">
        </label>
        <div id="pair-controls" class="hidden">
          <label>a <select id="pair-a"></select></label>
          <label>b <select id="pair-b"></select></label>
        </div>
        <div id="matrix-controls" class="hidden"></div>
      </section>
      <main id="view"></main>
    `;

    const tabs = this.byId("tabs");
    for (const view of VIEWS) {
      const btn = document.createElement("button");
      btn.type = "button";
      btn.className = "tab";
      btn.dataset.view = view;
      btn.textContent = view;
      tabs.appendChild(btn);
    }

    const fieldset = this.byId("collection-controls");
    for (const info of collections) {
      const label = document.createElement("label");
      label.className = "collection-toggle";
      const box = document.createElement("input");
      box.type = "checkbox";
      box.checked = true;
      box.dataset.label = info.label;
      box.title =
        `${info.num_novels} novels, ${info.num_docs} paragraphs, ` +
        `${info.total_tokens} tokens`;
      label.appendChild(box);
      label.append(` ${info.label}`);
      fieldset.appendChild(label);
    }

    for (const side of ["a", "b"] as const) {
      const select = this.byId(`pair-${side}`) as HTMLSelectElement;
      for (const info of collections) {
        const opt = document.createElement("option");
        opt.value = info.label;
        opt.textContent = info.label;
        select.appendChild(opt);
      }
      select.value = side === "a" ? this.state.pairA : this.state.pairB;
    }

    const metricBox = this.byId("matrix-controls");
    for (const metric of METRICS) {
      const label = document.createElement("label");
      label.className = "metric-toggle";
      const radio = document.createElement("input");
      radio.type = "radio";
      radio.name = "matrix-metric";
      radio.value = metric;
      radio.checked = metric === this.state.matrixChoice;
      label.appendChild(radio);
      label.append(metric === "combined" ? " jaccard/jsd triangle" : ` ${metric}`);
      metricBox.appendChild(label);
    }
  }

  private byId(id: string): HTMLElement {
    const el = this.root.querySelector(`#${id}`);
    if (!el) {
      throw new Error(`missing element #${id}`);
    }
    return el as HTMLElement;
  }

  private bindEvents(): void {
    const input = this.byId("keyword-input") as HTMLInputElement;
    this.byId("keyword-go").addEventListener("click", () => {
      this.lastWork = this.submitKeyword(input.value);
    });
    input.addEventListener("keydown", (ev) => {
      if ((ev as KeyboardEvent).key === "Enter") {
        this.lastWork = this.submitKeyword(input.value);
      }
    });

    this.byId("tabs").addEventListener("click", (ev) => {
      const target = ev.target as HTMLElement;
      const view = target.dataset.view as ViewName | undefined;
      if (view) {
        this.lastWork = this.showView(view);
      }
    });

    this.byId("collection-controls").addEventListener("change", (ev) => {
      const box = ev.target as HTMLInputElement;
      const label = box.dataset.label;
      if (!label) {
        return;
      }
      if (!toggleCollection(this.state, label)) {
        // refused: the selection may not go empty
        box.checked = true;
        return;
      }
      if (this.state.activeView === "terms") {
        this.lastWork = this.refreshTerms();
      }
    });

    const topn = this.byId("topn-input") as HTMLInputElement;
    topn.addEventListener("change", () => {
      setTopN(this.state, Number(topn.value));
      topn.value = String(this.state.topN);
      if (this.state.activeView === "terms") {
        this.lastWork = this.refreshTerms();
      }
    });

    for (const side of ["a", "b"] as const) {
      const select = this.byId(`pair-${side}`) as HTMLSelectElement;
      select.addEventListener("change", () => {
        if (side === "a") {
          this.state.pairA = select.value;
        } else {
          this.state.pairB = select.value;
        }
        if (this.state.activeView === "pair") {
          this.lastWork = this.refreshPair();
        }
      });
    }

    this.byId("matrix-controls").addEventListener("change", (ev) => {
      const radio = ev.target as HTMLInputElement;
      if (radio.name === "matrix-metric") {
        this.lastWork = this.setMetric(radio.value as MatrixChoice);
      }
    });
  }

  private syncControls(): void {
    for (const btn of this.root.querySelectorAll<HTMLElement>(".tab")) {
      btn.classList.toggle("active", btn.dataset.view === this.state.activeView);
    }
    const active = this.state.activeView;
    this.byId("collection-controls").classList.toggle("hidden", active !== "terms");
    this.byId("topn-control").classList.toggle("hidden", active !== "terms");
    this.byId("pair-controls").classList.toggle("hidden", active !== "pair");
    this.byId("matrix-controls").classList.toggle("hidden", active !== "matrix");
  }

  private updateMetricControls(): void {
    const radios = this.root.querySelectorAll<HTMLInputElement>(
      "#matrix-controls input[type=radio]"
    );
    for (const radio of radios) {
      const metric = radio.value;
      const off =
        metric === "combined"
          ? this.unavailableMetrics.has("jaccard") ||
            this.unavailableMetrics.has("jsd")
          : this.unavailableMetrics.has(metric);
      radio.disabled = off;
      radio.parentElement?.classList.toggle("disabled", off);
    }
  }

  private renderHistory(): void {
    const datalist = this.byId("keyword-history");
    datalist.textContent = "";
    for (const keyword of this.state.keywordHistory) {
      const opt = document.createElement("option");
      opt.value = keyword;
      datalist.appendChild(opt);
    }
  }

  // ======================== banner handling ========================

  private showBanner(message: string): void {
    const banner = this.byId("banner");
    banner.textContent = message;
    banner.classList.remove("hidden");
  }

  private clearBanner(): void {
    const banner = this.byId("banner");
    banner.textContent = "";
    banner.classList.add("hidden");
  }

  private bannerFor(err: unknown): void {
    if (err instanceof ApiError) {
      this.showBanner(`service error (${err.code}): ${err.message}`);
    } else {
      this.showBanner(`unexpected error: ${String(err)}`);
    }
  }

  // ========================== view logic ===========================

  private viewContainer(): HTMLElement {
    return this.byId("view");
  }

  private renderHint(): void {
    const view = this.viewContainer();
    view.innerHTML = "";
    const p = document.createElement("p");
    p.className = "hint";
    p.textContent =
      this.state.activeView === "matrix"
        ? ""
        : "type a keyword above and press expand";
    if (p.textContent) {
      view.appendChild(p);
    }
  }

  async submitKeyword(raw: string): Promise<void> {
    if (!setKeyword(this.state, raw)) {
      return;
    }
    this.renderHistory();
    await this.refreshActive();
  }

  async showView(view: ViewName): Promise<void> {
    setView(this.state, view);
    this.syncControls();
    await this.refreshActive();
  }

  async setMetric(metric: MatrixChoice): Promise<void> {
    this.state.matrixChoice = metric;
    if (this.state.activeView === "matrix") {
      await this.refreshMatrix();
    }
  }

  async refreshActive(): Promise<void> {
    if (this.state.activeView === "terms") {
      await this.refreshTerms();
    } else if (this.state.activeView === "pair") {
      await this.refreshPair();
    } else {
      await this.refreshMatrix();
    }
  }

  async refreshTerms(): Promise<void> {
    if (!this.state.currentKeyword) {
      this.renderHint();
      return;
    }
    const token = this.gates.terms.next();
    const keyword = this.state.currentKeyword;
    const labels = [...this.state.selectedCollections];
    try {
      const rows = await Promise.all(
        labels.map((label) => this.client.expand(keyword, label, this.state.topN))
      );
      if (!this.gates.terms.isCurrent(token)) {
        return;
      }
      this.clearBanner();
      renderTermsView(this.viewContainer(), keyword, rows);
    } catch (err) {
      if (!this.gates.terms.isCurrent(token)) {
        return;
      }
      // keep whatever is on screen, just surface the failure
      this.bannerFor(err);
    }
  }

  async refreshPair(): Promise<void> {
    if (!this.state.currentKeyword) {
      this.renderHint();
      return;
    }
    const token = this.gates.pair.next();
    try {
      const payload = await this.client.compare(
        this.state.currentKeyword,
        this.state.pairA,
        this.state.pairB
      );
      if (!this.gates.pair.isCurrent(token)) {
        return;
      }
      this.clearBanner();
      renderPairView(this.viewContainer(), payload);
    } catch (err) {
      if (!this.gates.pair.isCurrent(token)) {
        return;
      }
      this.bannerFor(err);
    }
  }

  private loadMatrix(metric: "jaccard" | "jsd" | "tau"): Promise<MatrixResponse> {
    const cached = this.matrixCache.get(metric);
    if (cached) {
      return cached;
    }
    const pending = this.client.matrix(metric).catch((err) => {
      // do not cache failures, but remember metrics the service
      // rejected outright so their controls can be disabled
      this.matrixCache.delete(metric);
      if (err instanceof ApiError && err.status === 400) {
        this.unavailableMetrics.add(metric);
        this.updateMetricControls();
      }
      throw err;
    });
    this.matrixCache.set(metric, pending);
    return pending;
  }

  async refreshMatrix(): Promise<void> {
    const token = this.gates.matrix.next();
    const choice = this.state.matrixChoice;
    try {
      if (choice === "combined") {
        const [jac, jsd] = await Promise.all([
          this.loadMatrix("jaccard"),
          this.loadMatrix("jsd"),
        ]);
        if (!this.gates.matrix.isCurrent(token)) {
          return;
        }
        this.clearBanner();
        renderCombinedMatrix(
          this.viewContainer(),
          jac as AggregateMatrixResponse,
          jsd as AggregateMatrixResponse
        );
      } else if (choice === "tau") {
        const payload = await this.loadMatrix("tau");
        if (!this.gates.matrix.isCurrent(token)) {
          return;
        }
        this.clearBanner();
        renderTauMatrix(this.viewContainer(), payload as TauMatrixResponse);
      } else {
        const payload = await this.loadMatrix(choice);
        if (!this.gates.matrix.isCurrent(token)) {
          return;
        }
        this.clearBanner();
        renderAggregateMatrix(
          this.viewContainer(),
          payload as AggregateMatrixResponse
        );
      }
    } catch (err) {
      if (!this.gates.matrix.isCurrent(token)) {
        return;
      }
      this.bannerFor(err);
    }
  }
}

// Fetches the collection list and mounts the explorer.  On failure the
// root shows a plain retry message instead of a broken shell.
export async function mountExplorer(
  root: HTMLElement,
  client: ApiClient
): Promise<App> {
  let collections: CollectionStats[];
  try {
    collections = (await client.collections()).collections;
  } catch (err) {
    root.innerHTML = "";
    const p = document.createElement("p");
    p.className = "load-error";
    p.textContent =
      err instanceof ApiError && err.status === 503
        ? "the service has no corpus loaded yet; start it with an index directory and reload"
        : `could not reach the service: ${String(err)}`;
    root.appendChild(p);
    throw err;
  }
  return new App(root, client, collections);
}
