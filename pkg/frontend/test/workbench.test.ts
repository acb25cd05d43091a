import { beforeEach, describe, expect, it, vi } from "vitest";

import { configureApi } from "../src/api";
import { draftToSpec } from "../src/draft";
import { PRESETS } from "../src/presets";
import { mountWorkbench } from "../src/workbench";
import type { DesignResponse } from "../src/types";
import { errorResponse, fakeFetch, jsonResponse, piliDesignResponse } from "./fakes";

function mount() {
  document.body.innerHTML = "";
  const root = document.createElement("div");
  document.body.append(root);
  const results: (DesignResponse | null)[] = [];
  const handle = mountWorkbench(root, { onResult: (response) => results.push(response) });
  return { root, handle, results };
}

function computeButton(root: HTMLElement): HTMLButtonElement {
  return [...root.querySelectorAll<HTMLButtonElement>("button")].find(
    (button) => button.textContent === "Compute design",
  ) as HTMLButtonElement;
}

function setInput(root: HTMLElement, field: string, value: string): void {
  const input = root.querySelector(`[data-field="${field}"]`) as HTMLInputElement;
  input.value = value;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

describe("design workbench", () => {
  beforeEach(() => {
    configureApi({ baseUrl: "", fetch: undefined });
  });

  it("computes the pili preset and hands the service answer to the dashboard", async () => {
    const fake = fakeFetch(() => jsonResponse(piliDesignResponse()));
    configureApi({ fetch: fake.fetch });
    const { root, handle, results } = mount();
    handle.applyPreset("pili");
    expect(results).toEqual([null]);
    computeButton(root).click();
    await vi.waitFor(() => expect(results).toHaveLength(2));
    expect(results[1]?.report.targeted.cost).toBe("182.40");
    expect(fake.calls).toHaveLength(1);
    const posted = JSON.parse(String(fake.calls[0].init?.body));
    expect(posted).toEqual(draftToSpec(PRESETS[0].draft()));
  });

  it("serves an identical draft from the cache without a second request", async () => {
    const fake = fakeFetch(() => jsonResponse(piliDesignResponse()));
    configureApi({ fetch: fake.fetch });
    const { root, handle, results } = mount();
    handle.applyPreset("pili");
    computeButton(root).click();
    await vi.waitFor(() => expect(results).toHaveLength(2));
    computeButton(root).click();
    await vi.waitFor(() => expect(results).toHaveLength(3));
    expect(fake.calls).toHaveLength(1);
    expect(results[2]).toBe(results[1]);
  });

  it("rejects l_max below l_min client-side without touching the service", async () => {
    const fake = fakeFetch(() => jsonResponse(piliDesignResponse()));
    configureApi({ fetch: fake.fetch });
    const { root, handle } = mount();
    handle.applyPreset("pili");
    setInput(root, "params.l_max", "30");
    computeButton(root).click();
    await vi.waitFor(() => {
      expect(root.querySelector(".problems li")?.textContent).toContain(
        "o_min <= o_max <= l_min <= l_max",
      );
    });
    expect(root.querySelector('[data-field="params"]')?.classList.contains("invalid")).toBe(true);
    expect(fake.calls).toHaveLength(0);
  });

  it("flags missing inputs field by field", async () => {
    const fake = fakeFetch(() => jsonResponse(piliDesignResponse()));
    configureApi({ fetch: fake.fetch });
    const { root } = mount();
    computeButton(root).click();
    await vi.waitFor(() => {
      expect(root.querySelectorAll(".problems li").length).toBe(1);
    });
    expect(root.querySelector('[data-field="protein"]')?.classList.contains("invalid")).toBe(true);
    expect(fake.calls).toHaveLength(0);
  });

  it("highlights the bounds when the service says infeasible", async () => {
    const fake = fakeFetch(() =>
      errorResponse(422, "infeasible", "no feasible partition: n=39, l_min=40"),
    );
    configureApi({ fetch: fake.fetch });
    const { root, handle } = mount();
    handle.applyPreset("pili");
    computeButton(root).click();
    await vi.waitFor(() => {
      expect(root.querySelector(".status .error")?.textContent).toContain("no feasible design:");
    });
    expect(root.querySelector(".status .error")?.textContent).toContain("n=39");
    expect(root.querySelector('[data-field="params"]')?.classList.contains("invalid")).toBe(true);
  });

  it("relays a budget_exceeded answer", async () => {
    const fake = fakeFetch(() =>
      errorResponse(422, "budget_exceeded", "partition search exceeded the time budget"),
    );
    configureApi({ fetch: fake.fetch });
    const { root, handle } = mount();
    handle.applyPreset("pili");
    computeButton(root).click();
    await vi.waitFor(() => {
      expect(root.querySelector(".status .error")?.textContent).toContain(
        "too hard for the service",
      );
    });
  });

  it("offers a retry when the service is unreachable, with no digits shown", async () => {
    configureApi({ fetch: () => Promise.reject(new TypeError("fetch failed")) });
    const { root, handle, results } = mount();
    handle.applyPreset("pili");
    computeButton(root).click();
    await vi.waitFor(() => {
      expect(root.querySelector(".status .error")?.textContent).toBe(
        "the design service is unreachable",
      );
    });
    const fake = fakeFetch(() => jsonResponse(piliDesignResponse()));
    configureApi({ fetch: fake.fetch });
    (root.querySelector(".status button") as HTMLButtonElement).click();
    await vi.waitFor(() => expect(results).toHaveLength(2));
    expect(results[1]?.report.targeted.total_nt).toBe(480);
  });

  it("lets a newer compute supersede an older in-flight one", async () => {
    const gates: ((response: Response) => void)[] = [];
    const fake = fakeFetch(
      () =>
        new Promise<Response>((resolve) => {
          gates.push(resolve);
        }),
    );
    configureApi({ fetch: fake.fetch });
    const { root, handle, results } = mount();
    handle.applyPreset("pili");

    computeButton(root).click();
    await vi.waitFor(() => expect(gates).toHaveLength(1));
    setInput(root, "cost", "0.76");
    computeButton(root).click();
    await vi.waitFor(() => expect(gates).toHaveLength(2));

    const first = piliDesignResponse();
    const second = piliDesignResponse();
    second.report.targeted.cost = "364.80";
    gates[1](jsonResponse(second));
    await vi.waitFor(() => expect(results).toHaveLength(2));
    gates[0](jsonResponse(first));
    await new Promise((resolve) => setTimeout(resolve, 20));

    expect(results).toHaveLength(2);
    expect(results[1]?.report.targeted.cost).toBe("364.80");
  });

  it("ignores a repeat click while the same draft is already in flight", async () => {
    const gates: ((response: Response) => void)[] = [];
    const fake = fakeFetch(
      () =>
        new Promise<Response>((resolve) => {
          gates.push(resolve);
        }),
    );
    configureApi({ fetch: fake.fetch });
    const { root, handle, results } = mount();
    handle.applyPreset("pili");
    computeButton(root).click();
    await vi.waitFor(() => expect(gates).toHaveLength(1));
    computeButton(root).click();
    computeButton(root).click();
    await new Promise((resolve) => setTimeout(resolve, 20));
    expect(gates).toHaveLength(1);
    gates[0](jsonResponse(piliDesignResponse()));
    await vi.waitFor(() => expect(results).toHaveLength(2));
  });
});
