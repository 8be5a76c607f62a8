// Typed client for the engine service. Three endpoints, nothing else.

import type { Dir, Topology } from "./rules";

export interface SolveResponse {
  value: number;
  strategy: [number, Dir][];
  n: number;
}

export interface ApplyLegal {
  board: string;
  legal: true;
  pawns: number;
}

export interface ApplyIllegal {
  board: string;
  legal: false;
  reason: string;
}

export type ApplyResponse = ApplyLegal | ApplyIllegal;

export interface HintResponse {
  move: [number, Dir];
  value_after: number;
  value_now: number;
}

/** The service answered with an error status (bad input, terminal hint). */
export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

/** The service could not be reached at all. */
export class OfflineError extends Error {
  constructor() {
    super("engine service unreachable");
  }
}

async function post<T>(url: string, body: unknown): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  } catch {
    throw new OfflineError();
  }
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const doc = await response.json();
      if (doc && typeof doc.detail === "string") detail = doc.detail;
    } catch {
      // keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class EngineClient {
  constructor(private baseUrl: string) {}

  solve(board: string, topology: Topology): Promise<SolveResponse> {
    return post(`${this.baseUrl}/solve`, { board, topology });
  }

  apply(
    board: string, topology: Topology, from: number, dir: Dir,
  ): Promise<ApplyResponse> {
    return post(`${this.baseUrl}/apply`, { board, topology, from, dir });
  }

  /** Resolves to null on a terminal position (the service answers 409). */
  async hint(board: string, topology: Topology): Promise<HintResponse | null> {
    try {
      return await post<HintResponse>(`${this.baseUrl}/hint`, {
        board,
        topology,
      });
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) return null;
      throw err;
    }
  }
}
