/**
 * Result dashboard: cost cards, targeted-vs-baseline comparison,
 * per-site table, a span track, and the oligo download. Every figure
 * shown is a response field rendered verbatim (numbers via String()),
 * so what the user reads is exactly what the service computed.
 */

import { oligosUrl } from "./api";
import { el, svgEl, clear } from "./dom";
import type { DesignResponse, OligoSetPayload, PartitionReport, SiteReport } from "./types";

function card(title: string, nt: string, cost: string, field: string): HTMLElement {
  return el(
    "div",
    { class: "card" },
    el("h3", {}, title),
    el(
      "p",
      { class: "figure" },
      el("strong", { "data-field": `${field}-total-nt` }, nt),
      el("span", { class: "muted" }, " nt synthesized"),
    ),
    el(
      "p",
      { class: "figure" },
      el("span", { class: "muted" }, "$ "),
      el("strong", { "data-field": `${field}-cost` }, cost),
    ),
  );
}

function spanTrack(report: PartitionReport, dnaLength: number, sites: SiteReport[]): SVGElement {
  const width = 720;
  const laneHeight = 26;
  const height = laneHeight * 2 + 30;
  const x = (pos: number) => (pos / dnaLength) * width;
  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${height}`,
    class: "span-track",
    role: "img",
    "aria-label": "oligo spans along the gene",
  });

  svg.append(
    svgEl("rect", {
      x: "0",
      y: String(height - 14),
      width: String(width),
      height: "8",
      class: "track-template",
      rx: "4",
    }),
  );
  for (const site of sites) {
    const left = x((site.position - 1) * 3);
    svg.append(
      svgEl("rect", {
        x: String(left),
        y: String(height - 16),
        width: String(Math.max(x(3), 2)),
        height: "12",
        class: "track-site",
      }),
    );
  }
  report.spans.forEach((span, i) => {
    const lane = i % 2;
    const y = 4 + lane * laneHeight;
    svg.append(
      svgEl(
        "g",
        { class: "track-span" },
        svgEl("rect", {
          x: String(x(span.start)),
          y: String(y),
          width: String(Math.max(x(span.length), 2)),
          height: String(laneHeight - 8),
          rx: "4",
        }),
        svgEl(
          "text",
          {
            x: String(x(span.start) + 6),
            y: String(y + laneHeight - 14),
            class: "track-label",
          },
          `x${span.multiplicity}`,
        ),
      ),
    );
  });
  return svg;
}

function siteRow(site: SiteReport): HTMLElement {
  return el(
    "tr",
    {},
    el("td", { "data-field": "site-position" }, String(site.position)),
    el("td", {}, site.amino_acids),
    el("td", { "data-field": "site-rank" }, String(site.rank)),
    el("td", {}, el("code", {}, site.decodons.join(" "))),
    el(
      "td",
      {},
      el("code", {}, site.baseline_decodon),
      site.baseline_extras
        ? el("span", { class: "warn" }, ` +${site.baseline_extras}`)
        : el("span", { class: "ok" }, " exact"),
    ),
  );
}

function fastaFromInline(sets: OligoSetPayload[]): string {
  const lines: string[] = [];
  for (const set of sets) {
    set.sequences.forEach((seq, v) => {
      lines.push(`>set=${set.index} span=${set.start}..${set.end} variant=${v} strand=${set.strand}`);
      lines.push(seq);
    });
  }
  return lines.join("\n") + "\n";
}

/** jsdom has no createObjectURL; a data URI carries small FASTAs fine. */
function fastaHref(fasta: string): string {
  if (typeof URL.createObjectURL === "function") {
    return URL.createObjectURL(new Blob([fasta], { type: "text/plain" }));
  }
  return `data:text/plain;charset=utf-8,${encodeURIComponent(fasta)}`;
}

export function renderDashboard(root: HTMLElement, response: DesignResponse | null): void {
  clear(root);
  if (!response) {
    root.append(el("p", { class: "muted" }, "design a library to see costs here"));
    return;
  }
  const { report, oligos } = response;

  root.append(
    el(
      "div",
      { class: "cards" },
      card("targeted library", String(report.targeted.total_nt), report.targeted.cost, "targeted"),
      card("single-decodon baseline", String(report.baseline.total_nt), report.baseline.cost, "baseline"),
    ),
  );

  const lib = report.library;
  const yieldLine = el(
    "p",
    { class: "yield-line" },
    el("span", { class: "muted" }, "library: "),
    el("strong", { "data-field": "library-target-size" }, lib.target_size),
    el("span", { class: "muted" }, " targeted variants; the baseline makes "),
    el("strong", { "data-field": "library-baseline-size" }, lib.baseline_size),
    el("span", { class: "muted" }, ", of which one in "),
    el("strong", { "data-field": "library-one-in" }, lib.baseline_one_in),
    el("span", { class: "muted" }, " is on target (fraction "),
    el("span", { "data-field": "library-fraction" }, lib.baseline_desired_fraction),
    el("span", { class: "muted" }, ")"),
  );
  root.append(yieldLine);

  root.append(
    el(
      "p",
      { class: "muted" },
      "gene length ",
      el("span", { "data-field": "dna-length" }, String(report.dna_length)),
      " nt, ",
      el("span", { "data-field": "protein-length" }, String(report.protein_length)),
      " residues",
    ),
  );

  root.append(spanTrack(report.targeted, report.dna_length, report.sites));

  if (report.sites.length) {
    const table = el(
      "table",
      { class: "sites-table" },
      el(
        "thead",
        {},
        el(
          "tr",
          {},
          el("th", {}, "position"),
          el("th", {}, "wanted"),
          el("th", {}, "decodons"),
          el("th", {}, "witness"),
          el("th", {}, "baseline"),
        ),
      ),
      el("tbody", {}, ...report.sites.map(siteRow)),
    );
    root.append(table);
  }

  const download = el("div", { class: "download" });
  const count = el("span", { "data-field": "oligo-count" }, String(oligos.count));
  if (oligos.inline) {
    const link = el("a", { class: "button", download: "oligos.fasta" }, "download oligo FASTA");
    link.href = fastaHref(fastaFromInline(oligos.sets));
    download.append(count, el("span", { class: "muted" }, " oligos "), link);
  } else {
    const link = el("a", { class: "button" }, "download oligo FASTA");
    link.href = oligosUrl(oligos.token);
    download.append(
      count,
      el("span", { class: "muted" }, " oligos (streamed from the service) "),
      link,
    );
  }
  root.append(download);
}
