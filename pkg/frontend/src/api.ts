/** Thin typed client for the workbench HTTP API.
 *
 * Responses keep their raw body text alongside the parsed value so views can
 * render service numbers verbatim (no reformatting, no arithmetic).
 */

import type {
  ErrorBody,
  GridSpec,
  HealthResponse,
  ModelQuery,
  ModelsResponse,
  ObjectiveSpec,
  OptimizeResponse,
  OptimizeStatus,
  PostprocessResponse,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, body: ErrorBody) {
    super(body.message);
    this.code = body.code;
    this.status = status;
  }
}

export interface ApiResult<T> {
  value: T;
  rawBody: string;
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function request<T>(
  fetchFn: FetchLike,
  url: string,
  init?: RequestInit,
): Promise<ApiResult<T>> {
  const response = await fetchFn(url, init);
  const rawBody = await response.text();
  if (!response.ok) {
    let body: ErrorBody;
    try {
      body = JSON.parse(rawBody) as ErrorBody;
    } catch {
      body = { code: "http_error", message: rawBody || response.statusText };
    }
    throw new ApiError(response.status, body);
  }
  return { value: JSON.parse(rawBody) as T, rawBody };
}

export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl = "", fetchFn: FetchLike = (input, init) => fetch(input, init)) {
    this.base = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn;
  }

  health(): Promise<ApiResult<HealthResponse>> {
    return request(this.fetchFn, `${this.base}/api/health`);
  }

  selectModel(query: ModelQuery): Promise<ApiResult<ModelsResponse>> {
    const params = new URLSearchParams();
    for (const [key, value] of Object.entries(query)) {
      if (value !== null && value !== undefined) params.set(key, String(value));
    }
    const suffix = params.size > 0 ? `?${params.toString()}` : "";
    return request(this.fetchFn, `${this.base}/api/models${suffix}`);
  }

  postprocess(
    config: { window_kind: string; window_length: number; threshold: number },
    signal?: AbortSignal,
  ): Promise<ApiResult<PostprocessResponse>> {
    return request(this.fetchFn, `${this.base}/api/postprocess`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(config),
      signal,
    });
  }

  optimize(
    grid: GridSpec,
    objective: ObjectiveSpec,
    signal?: AbortSignal,
  ): Promise<ApiResult<OptimizeResponse>> {
    return request(this.fetchFn, `${this.base}/api/optimize`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ grid, objective }),
      signal,
    });
  }

  optimizeStatus(): Promise<ApiResult<OptimizeStatus>> {
    return request(this.fetchFn, `${this.base}/api/optimize/status`);
  }
}
