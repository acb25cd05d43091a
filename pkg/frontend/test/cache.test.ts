import { afterEach, describe, expect, it, vi } from "vitest";

import { LatestRequest, ResponseCache, debounce, stableStringify } from "../src/cache";

function deferred<T>() {
  let resolve!: (value: T) => void;
  let reject!: (error: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

describe("stableStringify", () => {
  it("ignores object key order", () => {
    const a = stableStringify({ protein: "MA", params: { l_min: 40, l_max: 90 } });
    const b = stableStringify({ params: { l_max: 90, l_min: 40 }, protein: "MA" });
    expect(a).toBe(b);
  });

  it("keeps array order significant", () => {
    expect(stableStringify([1, 2])).not.toBe(stableStringify([2, 1]));
  });

  it("drops undefined values like JSON.stringify does", () => {
    expect(stableStringify({ a: 1, b: undefined })).toBe(stableStringify({ a: 1 }));
  });

  it("handles nested structures and primitives", () => {
    expect(stableStringify({ sites: [{ position: 5, amino_acids: "ADE" }] })).toBe(
      '{"sites":[{"amino_acids":"ADE","position":5}]}',
    );
    expect(stableStringify("x")).toBe('"x"');
    expect(stableStringify(null)).toBe("null");
  });
});

describe("ResponseCache", () => {
  it("returns what was stored, and undefined otherwise", () => {
    const cache = new ResponseCache<number>();
    expect(cache.get("k")).toBeUndefined();
    cache.set("k", 7);
    expect(cache.get("k")).toBe(7);
  });
});

describe("LatestRequest", () => {
  it("flags a superseded request as stale even if it settles first", async () => {
    const latest = new LatestRequest<string>();
    const slow = deferred<string>();
    const fast = deferred<string>();
    const first = latest.run(() => slow.promise);
    const second = latest.run(() => fast.promise);
    fast.resolve("new");
    slow.resolve("old");
    expect(await first).toEqual({ stale: true });
    expect(await second).toEqual({ stale: false, value: "new" });
  });

  it("reports errors only for the live request", async () => {
    const latest = new LatestRequest<string>();
    const dead = deferred<string>();
    const live = deferred<string>();
    const first = latest.run(() => dead.promise);
    const second = latest.run(() => live.promise);
    const boom = new Error("boom");
    dead.reject(boom);
    live.reject(boom);
    expect(await first).toEqual({ stale: true });
    const settled = await second;
    expect(settled.stale).toBe(false);
    expect(settled.error).toBe(boom);
  });

  it("passes a lone request through untouched", async () => {
    const latest = new LatestRequest<number>();
    expect(await latest.run(async () => 42)).toEqual({ stale: false, value: 42 });
  });
});

describe("debounce", () => {
  afterEach(() => {
    vi.useRealTimers();
  });

  it("collapses a burst into one trailing call", () => {
    vi.useFakeTimers();
    const seen: string[] = [];
    const wrapped = debounce((tag: string) => seen.push(tag), 100);
    wrapped.call("a");
    wrapped.call("b");
    wrapped.call("c");
    vi.advanceTimersByTime(99);
    expect(seen).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(seen).toEqual(["c"]);
  });

  it("flush fires the pending call immediately and only once", () => {
    vi.useFakeTimers();
    const seen: string[] = [];
    const wrapped = debounce((tag: string) => seen.push(tag), 100);
    wrapped.call("a");
    wrapped.flush();
    expect(seen).toEqual(["a"]);
    vi.advanceTimersByTime(200);
    expect(seen).toEqual(["a"]);
  });
});
