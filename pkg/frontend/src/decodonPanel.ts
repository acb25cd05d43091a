/**
 * Live amino-acid-set explorer. Toggling letters fires one debounced
 * /api/decodons call per distinct selection; responses are cached for
 * the session and rendered verbatim. With nothing selected the panel
 * is idle and no request leaves the page.
 */

import { ApiRequestError, fetchDecodons } from "./api";
import { LatestRequest, ResponseCache, debounce } from "./cache";
import { el, clear } from "./dom";
import { AMINO_ACIDS } from "./draft";
import type { DecodonsResponse } from "./types";

export interface DecodonPanelHandle {
  /** Replace the selection programmatically (used by site editors). */
  setSelection(letters: string): void;
  readonly selection: ReadonlySet<string>;
}

export function mountDecodonPanel(
  root: HTMLElement,
  options: { debounceMs?: number } = {},
): DecodonPanelHandle {
  const selection = new Set<string>();
  const cache = new ResponseCache<DecodonsResponse>();
  const inFlight = new LatestRequest<DecodonsResponse>();

  const grid = el("div", { class: "aa-grid", role: "group", "aria-label": "amino acids" });
  const output = el("div", { class: "panel-output", "data-testid": "decodon-output" });
  root.append(grid, output);

  const buttons = new Map<string, HTMLButtonElement>();
  for (const letter of AMINO_ACIDS) {
    const button = el("button", { type: "button", class: "aa-toggle" }, letter);
    button.setAttribute("aria-pressed", "false");
    button.addEventListener("click", () => {
      if (selection.has(letter)) selection.delete(letter);
      else selection.add(letter);
      button.setAttribute("aria-pressed", selection.has(letter) ? "true" : "false");
      button.classList.toggle("on", selection.has(letter));
      onSelectionChange();
    });
    buttons.set(letter, button);
    grid.append(button);
  }

  function key(): string {
    return [...selection].sort().join("");
  }

  function renderIdle(): void {
    clear(output);
    output.append(el("p", { class: "muted" }, "toggle amino acids to see how many decodons they need"));
  }

  function renderLoading(): void {
    clear(output);
    output.append(el("p", { class: "muted" }, "looking up..."));
  }

  function renderError(message: string, retry: () => void): void {
    clear(output);
    const button = el("button", { type: "button", class: "retry" }, "retry");
    button.addEventListener("click", retry);
    output.append(el("p", { class: "error", role: "alert" }, message), button);
  }

  function renderResponse(body: DecodonsResponse): void {
    clear(output);
    const rank = el(
      "p",
      { class: "rank-line" },
      el("span", { class: "label" }, "decodons needed: "),
      el("strong", { "data-field": "rank" }, String(body.rank)),
      el("span", { class: "muted" }, ` for ${body.amino_acids}`),
    );
    const witness = el("ul", { class: "witness-list" });
    for (const entry of body.witness) {
      witness.append(
        el(
          "li",
          {},
          el("code", { class: "decodon" }, entry.decodon),
          el("span", { class: "muted" }, " encodes "),
          el("span", {}, entry.amino_acids),
          el("span", { class: "muted" }, " via "),
          el("code", { class: "expansions" }, entry.expansions.join(" ")),
        ),
      );
    }
    const base = body.baseline;
    const baseline = el(
      "p",
      { class: "baseline-line" },
      el("span", { class: "label" }, "single-decodon baseline: "),
      el("code", { class: "decodon" }, base.decodon),
      base.extras
        ? el(
            "span",
            { class: "warn", "data-field": "baseline-extras" },
            ` adds unwanted ${base.extras}`,
          )
        : el("span", { class: "ok" }, " exact, no extras"),
      el(
        "span",
        { class: "muted" },
        ` (${base.desired_expansions} desired / ${base.undesired_expansions} undesired codons)`,
      ),
    );
    output.append(rank, witness, baseline);
  }

  async function lookup(): Promise<void> {
    const letters = key();
    if (!letters) return;
    const cached = cache.get(letters);
    if (cached) {
      renderResponse(cached);
      return;
    }
    renderLoading();
    const settled = await inFlight.run(() => fetchDecodons(letters));
    if (settled.stale) return;
    if (settled.error !== undefined) {
      const message =
        settled.error instanceof ApiRequestError || settled.error instanceof Error
          ? settled.error.message
          : "lookup failed";
      renderError(message, () => void lookup());
      return;
    }
    const body = settled.value as DecodonsResponse;
    cache.set(letters, body);
    if (key() === letters) renderResponse(body);
  }

  const debounced = debounce(() => void lookup(), options.debounceMs ?? 150);

  function onSelectionChange(): void {
    if (selection.size === 0) {
      renderIdle();
      return;
    }
    debounced.call();
  }

  renderIdle();

  return {
    setSelection(letters: string) {
      selection.clear();
      for (const letter of letters) selection.add(letter);
      for (const [letter, button] of buttons) {
        const on = selection.has(letter);
        button.setAttribute("aria-pressed", on ? "true" : "false");
        button.classList.toggle("on", on);
      }
      onSelectionChange();
    },
    selection,
  };
}
