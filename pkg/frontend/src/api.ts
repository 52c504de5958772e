// Thin fetch client for the session service.  Every number shown anywhere
// in the UI comes from one of these responses.

import type {
  ApiErrorBody,
  CapacityResult,
  CheckResult,
  EvaluateResult,
  RepairsResult,
  ScalesResult,
  SmaaResult,
  TableDoc,
} from "./types";

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: ApiErrorBody,
  ) {
    super(`${body.code}: ${body.message}`);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(base + path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!response.ok) {
    const body = (await response.json().catch(() => ({
      code: "unknown",
      message: response.statusText,
      location: "",
    }))) as ApiErrorBody;
    throw new ApiError(response.status, body);
  }
  return response.json() as Promise<T>;
}

export class SessionClient {
  constructor(private base: string = "") {}

  createProject(doc?: unknown): Promise<{ id: string; version: number }> {
    return request(this.base, "/projects", { method: "POST", body: JSON.stringify(doc ?? null) });
  }

  readProject(id: string): Promise<{ id: string; version: number; project: unknown }> {
    return request(this.base, `/projects/${id}`);
  }

  putTable(id: string, criterion: string, table: TableDoc): Promise<{ ok: boolean; version: number }> {
    return request(this.base, `/projects/${id}/criteria/${criterion}/table`, {
      method: "PUT",
      body: JSON.stringify(table),
    });
  }

  check(id: string, criterion: string): Promise<CheckResult> {
    return request(this.base, `/projects/${id}/criteria/${criterion}/check`, { method: "POST" });
  }

  repairs(id: string, criterion: string): Promise<RepairsResult> {
    return request(this.base, `/projects/${id}/criteria/${criterion}/repairs`, { method: "POST" });
  }

  applyRepair(id: string, criterion: string, k: number): Promise<{ ok: boolean; version: number }> {
    return request(this.base, `/projects/${id}/criteria/${criterion}/repairs/${k}/apply`, {
      method: "POST",
    });
  }

  completions(
    id: string,
    criterion: string,
    page: { offset: number; limit: number },
  ): Promise<{ total: number; tables: TableDoc[]; next_offset: number | null; complete: boolean }> {
    return request(this.base, `/projects/${id}/criteria/${criterion}/completions`, {
      method: "POST",
      body: JSON.stringify(page),
    });
  }

  scales(id: string): Promise<ScalesResult> {
    return request(this.base, `/projects/${id}/scales`, { method: "POST" });
  }

  capacity(id: string): Promise<CapacityResult> {
    return request(this.base, `/projects/${id}/capacity`, { method: "POST" });
  }

  evaluate(id: string): Promise<EvaluateResult> {
    return request(this.base, `/projects/${id}/evaluate`, { method: "POST" });
  }

  smaa(
    id: string,
    params: { mode: "enum" | "sample"; n?: number; seed?: number; sample_criteria?: string[] },
  ): Promise<SmaaResult> {
    return request(this.base, `/projects/${id}/smaa`, {
      method: "POST",
      body: JSON.stringify(params),
    });
  }
}
