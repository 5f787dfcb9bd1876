import type {
  CollectionsResponse,
  CompareResponse,
  ErrorBody,
  ExpandResponse,
  MatrixResponse,
} from "./types.js";

export type FetchLike = (url: string) => Promise<Response>;

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
  }
}

// Stale-response guard.  Every in-flight request for a view takes a
// token; only the holder of the newest token may apply its result.
// Responses that lost the race are dropped, never rendered.
export class RequestGate {
  private seq = 0;

  next(): number {
    this.seq += 1;
    return this.seq;
  }

  isCurrent(token: number): boolean {
    return token === this.seq;
  }
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl = "", fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    // Wrap the global so we never call fetch with a detached `this`.
    this.fetchFn = fetchFn ?? ((url) => fetch(url));
  }

  private async get<T>(path: string, params: Record<string, string>): Promise<T> {
    const search = new URLSearchParams(params).toString();
    const url = `${this.baseUrl}${path}${search ? "?" + search : ""}`;
    let res: Response;
    try {
      res = await this.fetchFn(url);
    } catch (err) {
      throw new ApiError(0, "unreachable", `service unreachable: ${String(err)}`);
    }
    if (!res.ok) {
      let body: ErrorBody = { code: "error", message: `HTTP ${res.status}` };
      try {
        body = (await res.json()) as ErrorBody;
      } catch {
        // non-JSON error body, keep the generic message
      }
      throw new ApiError(res.status, body.code, body.message);
    }
    return (await res.json()) as T;
  }

  collections(): Promise<CollectionsResponse> {
    return this.get<CollectionsResponse>("/api/collections", {});
  }

  expand(q: string, collection: string, top: number): Promise<ExpandResponse> {
    return this.get<ExpandResponse>("/api/expand", {
      q,
      collection,
      top: String(top),
    });
  }

  compare(q: string, a: string, b: string): Promise<CompareResponse> {
    return this.get<CompareResponse>("/api/compare", { q, a, b });
  }

  matrix(metric: string): Promise<MatrixResponse> {
    return this.get<MatrixResponse>("/api/matrix", { metric });
  }
}
