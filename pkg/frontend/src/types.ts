/** Payload types mirroring the workbench HTTP API. */

export interface ModelQuery {
  window_size?: number | null;
  dimensionality?: number | null;
  reduced_features?: boolean | null;
  binary?: boolean | null;
}

export interface ModelSummary {
  model_name: string;
  accuracy: number;
  analysis_length: number;
  test_avg_f1: number;
}

export interface MetricsPayload {
  accuracy_pct: number;
  fp_pct: number;
  fn_pct: number;
  f1: number;
  tp: number;
  tn: number;
  fp: number;
  fn: number;
  runtime_mean_ms: number;
  runtime_max_ms: number;
  runtime_p99_ms: number;
}

export interface PiePayload {
  inner: { correct: number; incorrect: number };
  outer: { tp: number; tn: number; fp: number; fn: number };
}

export interface Channel {
  i: number[];
  v: number[];
}

export type ChannelName =
  | "predicted"
  | "ground_truth"
  | "smoothed"
  | "decided"
  | "cma"
  | "runtime";

export interface ConfigPayload {
  window: { kind: string; length: number };
  threshold: number;
}

export interface ModelsResponse {
  model: ModelSummary;
  metrics: MetricsPayload;
  pie: PiePayload;
  session: string;
}

export interface PostprocessResponse {
  config: ConfigPayload;
  warmup_len: number;
  metrics: MetricsPayload;
  pie: PiePayload;
  channels: Record<ChannelName, Channel>;
  decimation_factor: number;
  session: string;
}

export interface OptimizeResponse {
  best_config: ConfigPayload;
  best_metrics: MetricsPayload;
  pie: PiePayload;
  evaluated: number;
  feasible: number;
  session: string;
}

export interface OptimizeStatus {
  state: "idle" | "running" | "done" | "failed";
  evaluated: number;
  total: number;
}

export interface HealthResponse {
  status: "ok" | "degraded";
  pool_size: number;
  version: string;
}

export interface ErrorBody {
  code: string;
  message: string;
}

export interface GridSpec {
  kinds: string[];
  lengths: number[];
  thresholds: number[];
}

export interface ObjectiveSpec {
  target: "max_accuracy" | "min_fp_ratio" | "min_fn_ratio";
  accuracy_floor?: number | null;
}

export const WINDOW_KINDS = [
  "rectangular",
  "triangular",
  "hamming",
  "hann",
  "blackman",
  "bohman",
] as const;

export type WindowKindName = (typeof WINDOW_KINDS)[number];
