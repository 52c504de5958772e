// The client hits the documented endpoints with the documented bodies and
// surfaces structured errors.

import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiError, SessionClient } from "../src/api";
import type { TableDoc } from "../src/types";
import { fixture } from "./helpers";

interface Call {
  url: string;
  method: string;
  body: unknown;
}

function stubFetch(status: number, payload: unknown): Call[] {
  const calls: Call[] = [];
  vi.stubGlobal("fetch", async (url: string, init?: RequestInit) => {
    calls.push({
      url,
      method: init?.method ?? "GET",
      body: init?.body ? JSON.parse(init.body as string) : undefined,
    });
    return new Response(JSON.stringify(payload), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  });
  return calls;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("session client", () => {
  it("posts table edits to the criterion's table endpoint", async () => {
    const calls = stubFetch(200, { ok: true, version: 1 });
    const client = new SessionClient("http://svc");
    const table = fixture<TableDoc>("table_inconsistent");
    await client.putTable("p1", "c1", table);
    expect(calls[0].url).toBe("http://svc/projects/p1/criteria/c1/table");
    expect(calls[0].method).toBe("PUT");
    expect(calls[0].body).toEqual(table);
  });

  it("requests repairs and applies one by index", async () => {
    const calls = stubFetch(200, { ok: true, version: 2 });
    const client = new SessionClient("");
    await client.repairs("p1", "c1");
    await client.applyRepair("p1", "c1", 3);
    expect(calls.map((c) => c.url)).toEqual([
      "/projects/p1/criteria/c1/repairs",
      "/projects/p1/criteria/c1/repairs/3/apply",
    ]);
    expect(calls.every((c) => c.method === "POST")).toBe(true);
  });

  it("passes smaa parameters through the body", async () => {
    const calls = stubFetch(200, fixture("smaa_quarry"));
    await new SessionClient("").smaa("p1", {
      mode: "sample",
      n: 10000,
      seed: 20240,
      sample_criteria: ["g3"],
    });
    expect(calls[0].body).toEqual({
      mode: "sample",
      n: 10000,
      seed: 20240,
      sample_criteria: ["g3"],
    });
  });

  it("raises structured errors with the service's code and location", async () => {
    stubFetch(409, { code: "stale", message: "repairs were computed for an older table version", location: "" });
    const client = new SessionClient("");
    const failure = client.applyRepair("p1", "c1", 0);
    await expect(failure).rejects.toBeInstanceOf(ApiError);
    await expect(failure).rejects.toMatchObject({ status: 409, body: { code: "stale" } });
  });
});
