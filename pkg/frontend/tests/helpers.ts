// Test plumbing: an in-memory stand-in for the JSON service.  Tests
// register payloads per endpoint, mount the real app against a fetch
// stub, and assert on the DOM.  No real network, no real service.

import { ApiClient, type FetchLike } from "../src/api.js";
import { App, mountExplorer } from "../src/app.js";
import type {
  CollectionsResponse,
  CompareResponse,
  ExpandResponse,
  MatrixResponse,
} from "../src/types.js";

export interface HttpErrorSpec {
  kind: "http-error";
  status: number;
  code: string;
  message: string;
}

export function httpError(
  status: number,
  code: string,
  message: string
): HttpErrorSpec {
  return { kind: "http-error", status, code, message };
}

function isHttpError(x: unknown): x is HttpErrorSpec {
  return (
    typeof x === "object" &&
    x !== null &&
    (x as HttpErrorSpec).kind === "http-error"
  );
}

// Minimal Response shape; the client only touches ok/status/json.
function jsonResponse(status: number, payload: unknown): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => payload,
  } as unknown as Response;
}

type Payload =
  | CollectionsResponse
  | ExpandResponse
  | CompareResponse
  | MatrixResponse;

type RouteResult = Payload | HttpErrorSpec | Promise<Payload | HttpErrorSpec>;

export interface Routes {
  collections: () => RouteResult;
  expand: (q: string, collection: string, top: number) => RouteResult;
  compare: (q: string, a: string, b: string) => RouteResult;
  matrix: (metric: string) => RouteResult;
}

export interface CallRecord {
  path: string;
  params: URLSearchParams;
}

export interface StubService {
  fetchFn: FetchLike;
  calls: CallRecord[];
  callsTo(path: string): CallRecord[];
}

export function stubService(routes: Routes): StubService {
  const calls: CallRecord[] = [];
  const fetchFn: FetchLike = async (url) => {
    const parsed = new URL(url, "http://stub.test");
    const params = parsed.searchParams;
    calls.push({ path: parsed.pathname, params });
    let result: RouteResult;
    switch (parsed.pathname) {
      case "/api/collections":
        result = routes.collections();
        break;
      case "/api/expand":
        result = routes.expand(
          params.get("q") ?? "",
          params.get("collection") ?? "FULL",
          Number(params.get("top") ?? "15")
        );
        break;
      case "/api/compare":
        result = routes.compare(
          params.get("q") ?? "",
          params.get("a") ?? "",
          params.get("b") ?? ""
        );
        break;
      case "/api/matrix":
        result = routes.matrix(params.get("metric") ?? "jaccard");
        break;
      default:
        return jsonResponse(404, { code: "not_found", message: parsed.pathname });
    }
    const settled = await result;
    if (isHttpError(settled)) {
      return jsonResponse(settled.status, {
        code: settled.code,
        message: settled.message,
      });
    }
    return jsonResponse(200, settled);
  };
  return {
    fetchFn,
    calls,
    callsTo: (path: string) => calls.filter((c) => c.path === path),
  };
}

export interface Mounted {
  app: App;
  root: HTMLElement;
  service: StubService;
}

export async function mountWithRoutes(routes: Routes): Promise<Mounted> {
  const service = stubService(routes);
  const root = document.createElement("div");
  document.body.appendChild(root);
  const app = await mountExplorer(root, new ApiClient("", service.fetchFn));
  return { app, root, service };
}

// Drains pending promise chains, including ones queued via setTimeout.
export function settle(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

export function typeKeyword(root: HTMLElement, keyword: string): void {
  const input = root.querySelector<HTMLInputElement>("#keyword-input");
  const go = root.querySelector<HTMLButtonElement>("#keyword-go");
  if (!input || !go) {
    throw new Error("keyword controls not mounted");
  }
  input.value = keyword;
  go.click();
}

export function clickTab(root: HTMLElement, view: string): void {
  const tab = root.querySelector<HTMLElement>(`.tab[data-view="${view}"]`);
  if (!tab) {
    throw new Error(`no tab for view ${view}`);
  }
  tab.click();
}

export function pickMetric(root: HTMLElement, metric: string): void {
  const radio = root.querySelector<HTMLInputElement>(
    `#matrix-controls input[value="${metric}"]`
  );
  if (!radio) {
    throw new Error(`no metric radio ${metric}`);
  }
  radio.checked = true;
  radio.dispatchEvent(new Event("change", { bubbles: true }));
}
