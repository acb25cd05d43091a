/**
 * Thin client for the three service endpoints. Every non-2xx answer
 * from the service carries {"error": {"code", "message"}}; that
 * envelope is surfaced as ApiRequestError so callers can branch on
 * the code (infeasible, budget_exceeded, ...) without string-matching.
 */

import type { DecodonsResponse, DesignResponse, HealthResponse } from "./types";

export class ApiRequestError extends Error {
  readonly status: number;
  readonly code: string;

  constructor(status: number, code: string, message: string) {
    super(message);
    this.status = status;
    this.code = code;
  }
}

/** Thrown when the request never reached the service at all. */
export class NetworkUnavailableError extends Error {
  constructor() {
    super("the design service is unreachable");
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

let baseUrl = "";
let fetchFn: FetchLike | null = null;

/** Point the client somewhere else (tests, dev against a remote box). */
export function configureApi(options: { baseUrl?: string; fetch?: FetchLike }): void {
  if (options.baseUrl !== undefined) baseUrl = options.baseUrl.replace(/\/$/, "");
  if (options.fetch !== undefined) fetchFn = options.fetch;
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const doFetch = fetchFn ?? (globalThis.fetch as FetchLike | undefined);
  if (!doFetch) throw new NetworkUnavailableError();
  let response: Response;
  try {
    response = await doFetch(baseUrl + path, init);
  } catch {
    throw new NetworkUnavailableError();
  }
  const body = await response.json().catch(() => null);
  if (!response.ok) {
    const err = body && typeof body === "object" ? (body as any).error : null;
    throw new ApiRequestError(
      response.status,
      err?.code ?? "unknown",
      err?.message ?? `request failed (${response.status})`,
    );
  }
  return body as T;
}

export function fetchHealth(): Promise<HealthResponse> {
  return request<HealthResponse>("/api/health");
}

export function fetchDecodons(letters: string): Promise<DecodonsResponse> {
  return request<DecodonsResponse>(`/api/decodons?aa=${encodeURIComponent(letters)}`);
}

export function postDesign(spec: object): Promise<DesignResponse> {
  return request<DesignResponse>("/api/design", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(spec),
  });
}

/** Download URL for a large design's FASTA (server streams it). */
export function oligosUrl(token: string): string {
  return `${baseUrl}/api/oligos?token=${encodeURIComponent(token)}`;
}
