/**
 * Design workbench: the editable job form plus the Compute action.
 *
 * Identical drafts are served from an input-hash cache without a
 * request; at most one design request is in flight and a newer
 * Compute supersedes the result of an older one. Nothing here does
 * library math; the dashboard only ever sees service responses.
 */

import { ApiRequestError, NetworkUnavailableError, postDesign } from "./api";
import { LatestRequest, ResponseCache, stableStringify } from "./cache";
import { el, clear } from "./dom";
import {
  AMINO_ACIDS,
  blankDraft,
  draftToSpec,
  validateDraft,
  type DraftProblem,
  type SessionDraft,
  type SiteDraft,
} from "./draft";
import { PRESETS } from "./presets";
import type { DesignResponse, Params } from "./types";

export interface WorkbenchOptions {
  onResult: (response: DesignResponse | null) => void;
}

export interface WorkbenchHandle {
  applyPreset(id: string): void;
  compute(): Promise<void>;
}

const PARAM_KEYS: (keyof Params)[] = ["l_min", "l_max", "o_min", "o_max"];

function letterToggles(site: SiteDraft): HTMLElement {
  const box = el("div", { class: "letters" });
  for (const aa of AMINO_ACIDS) {
    const button = el(
      "button",
      {
        type: "button",
        class: site.letters.has(aa) ? "aa-toggle on" : "aa-toggle",
        "aria-pressed": String(site.letters.has(aa)),
        "data-aa": aa,
      },
      aa,
    );
    button.addEventListener("click", () => {
      if (site.letters.has(aa)) site.letters.delete(aa);
      else site.letters.add(aa);
      const on = site.letters.has(aa);
      button.classList.toggle("on", on);
      button.setAttribute("aria-pressed", String(on));
    });
    box.append(button);
  }
  return box;
}

export function mountWorkbench(root: HTMLElement, options: WorkbenchOptions): WorkbenchHandle {
  let draft: SessionDraft = blankDraft();
  const cache = new ResponseCache<DesignResponse>();
  const inflight = new LatestRequest<DesignResponse>();
  let inflightKey: string | null = null;

  const presetSelect = el(
    "select",
    { "data-field": "preset" },
    el("option", { value: "" }, "custom job"),
    ...PRESETS.map((preset) => el("option", { value: preset.id }, preset.label)),
  );
  presetSelect.addEventListener("change", () => {
    if (presetSelect.value) {
      applyPreset(presetSelect.value);
      return;
    }
    draft = blankDraft();
    clearMarks();
    rebuildForm();
    options.onResult(null);
  });

  const proteinInput = el("textarea", {
    "data-field": "protein",
    rows: "4",
    spellcheck: "false",
    placeholder: "one-letter protein sequence",
  });
  proteinInput.addEventListener("input", () => {
    draft.protein = proteinInput.value;
  });

  const sitesBox = el("div", { class: "sites" });
  const addSiteButton = el("button", { type: "button", class: "ghost" }, "add site");
  addSiteButton.addEventListener("click", () => {
    draft.sites.push({ position: "", letters: new Set() });
    rebuildSites();
  });

  const paramInputs = {} as Record<keyof Params, HTMLInputElement>;
  const paramsBox = el("fieldset", { class: "params", "data-field": "params" },
    el("legend", {}, "oligo bounds (nt)"));
  for (const key of PARAM_KEYS) {
    const input = el("input", { "data-field": `params.${key}`, inputmode: "numeric" });
    input.addEventListener("input", () => {
      draft.params[key] = input.value;
    });
    paramInputs[key] = input;
    paramsBox.append(el("label", { class: "param" }, key, input));
  }

  const costInput = el("input", { "data-field": "cost", inputmode: "decimal" });
  costInput.addEventListener("input", () => {
    draft.costPerNt = costInput.value;
  });

  const computeButton = el("button", { type: "button", class: "primary" }, "Compute design");
  computeButton.addEventListener("click", () => {
    void compute();
  });
  const statusBox = el("span", { class: "status", role: "status" });
  const problemsBox = el("ul", { class: "problems" });

  root.append(
    el("label", { class: "field" }, "load an example", presetSelect),
    el("label", { class: "field" }, "protein", proteinInput),
    el("div", { class: "field" }, el("span", { class: "field-name" }, "sites"), sitesBox, addSiteButton),
    paramsBox,
    el("label", { class: "field cost-field" }, "cost per nt ($)", costInput),
    el("div", { class: "actions" }, computeButton, statusBox),
    problemsBox,
  );

  function rebuildSites(): void {
    clear(sitesBox);
    draft.sites.forEach((site, i) => {
      const positionInput = el("input", {
        class: "pos",
        inputmode: "numeric",
        "aria-label": "site position",
        value: site.position,
      });
      positionInput.addEventListener("input", () => {
        site.position = positionInput.value;
      });
      const removeButton = el("button", { type: "button", class: "ghost" }, "remove");
      removeButton.addEventListener("click", () => {
        draft.sites.splice(i, 1);
        rebuildSites();
      });
      sitesBox.append(
        el("div", { class: "site-row", "data-field": `sites.${i}` },
          positionInput, letterToggles(site), removeButton),
      );
    });
  }

  function rebuildForm(): void {
    proteinInput.value = draft.protein;
    for (const key of PARAM_KEYS) paramInputs[key].value = draft.params[key];
    costInput.value = draft.costPerNt;
    rebuildSites();
  }

  function clearMarks(): void {
    for (const node of root.querySelectorAll(".invalid")) node.classList.remove("invalid");
    clear(problemsBox);
    clear(statusBox);
  }

  function markProblems(problems: DraftProblem[]): void {
    for (const problem of problems) {
      const target = root.querySelector(`[data-field="${problem.field}"]`);
      if (target) target.classList.add("invalid");
      problemsBox.append(el("li", { role: "alert" }, problem.message));
    }
  }

  function setBusy(busy: boolean): void {
    statusBox.textContent = busy ? "designing..." : "";
  }

  function showFailure(error: unknown): void {
    clear(statusBox);
    if (error instanceof NetworkUnavailableError) {
      const retry = el("button", { type: "button", class: "ghost" }, "retry");
      retry.addEventListener("click", () => {
        void compute();
      });
      statusBox.append(el("span", { class: "error", role: "alert" }, error.message), retry);
      return;
    }
    if (error instanceof ApiRequestError) {
      if (error.code === "infeasible") {
        paramsBox.classList.add("invalid");
        statusBox.append(
          el("span", { class: "error", role: "alert" }, `no feasible design: ${error.message}`),
        );
        return;
      }
      if (error.code === "budget_exceeded") {
        statusBox.append(
          el("span", { class: "error", role: "alert" }, `too hard for the service: ${error.message}`),
        );
        return;
      }
      statusBox.append(el("span", { class: "error", role: "alert" }, error.message));
      return;
    }
    statusBox.append(el("span", { class: "error", role: "alert" }, "the design request failed"));
  }

  async function compute(): Promise<void> {
    clearMarks();
    const problems = validateDraft(draft);
    if (problems.length) {
      markProblems(problems);
      return;
    }
    const spec = draftToSpec(draft);
    const key = stableStringify(spec);
    const cached = cache.get(key);
    if (cached) {
      options.onResult(cached);
      return;
    }
    if (key === inflightKey) {
      setBusy(true);
      return;
    }
    inflightKey = key;
    setBusy(true);
    const settled = await inflight.run(() => postDesign(spec));
    if (settled.stale) return;
    inflightKey = null;
    setBusy(false);
    if (settled.error !== undefined) {
      showFailure(settled.error);
      return;
    }
    const response = settled.value as DesignResponse;
    cache.set(key, response);
    options.onResult(response);
  }

  function applyPreset(id: string): void {
    const preset = PRESETS.find((candidate) => candidate.id === id);
    if (!preset) return;
    draft = preset.draft();
    presetSelect.value = id;
    clearMarks();
    rebuildForm();
    options.onResult(null);
  }

  rebuildForm();
  return { applyPreset, compute };
}
