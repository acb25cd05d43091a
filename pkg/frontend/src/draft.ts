/**
 * The editable session draft and its validation.
 *
 * Validation here mirrors what the service will reject anyway; its
 * only job is to keep invalid drafts from being submitted and to
 * point at the offending field. It never computes any design figure.
 */

import type { JobSpec, Params } from "./types";

export const AMINO_ACIDS = "ACDEFGHIKLMNPQRSTVWY";

export interface SiteDraft {
  /** Raw text so partially typed positions survive re-renders. */
  position: string;
  letters: Set<string>;
}

export interface SessionDraft {
  protein: string;
  sites: SiteDraft[];
  params: Record<keyof Params, string>;
  costPerNt: string;
}

export interface DraftProblem {
  /** Which input to highlight: "protein", "cost", "params.l_min", "sites.2", ... */
  field: string;
  message: string;
}

export function blankDraft(): SessionDraft {
  return {
    protein: "",
    sites: [],
    params: { l_min: "40", l_max: "90", o_min: "20", o_max: "40" },
    costPerNt: "0.38",
  };
}

export function cleanProtein(text: string): string {
  return text.toUpperCase().replace(/\s/g, "");
}

function parseIntField(raw: string): number | null {
  if (!/^\d+$/.test(raw.trim())) return null;
  return Number(raw.trim());
}

/** All problems with the draft, empty when it is submittable. */
export function validateDraft(draft: SessionDraft): DraftProblem[] {
  const problems: DraftProblem[] = [];
  const protein = cleanProtein(draft.protein);

  if (protein.length === 0) {
    problems.push({ field: "protein", message: "paste a protein sequence first" });
  } else {
    for (let i = 0; i < protein.length; i++) {
      if (!AMINO_ACIDS.includes(protein[i])) {
        problems.push({
          field: "protein",
          message: `residue ${i + 1}: "${protein[i]}" is not a standard amino acid`,
        });
        break;
      }
    }
  }

  const seen = new Set<number>();
  draft.sites.forEach((site, i) => {
    const field = `sites.${i}`;
    const position = parseIntField(site.position);
    if (position === null || position < 1 || position > protein.length) {
      problems.push({
        field,
        message: "site position must be a residue number inside the protein",
      });
    } else if (seen.has(position)) {
      problems.push({ field, message: `two sites share position ${position}` });
    } else {
      seen.add(position);
    }
    if (site.letters.size === 0) {
      problems.push({ field, message: "pick at least one amino acid for the site" });
    }
  });

  const params: Partial<Params> = {};
  (Object.keys(draft.params) as (keyof Params)[]).forEach((key) => {
    const value = parseIntField(draft.params[key]);
    if (value === null || value <= 0) {
      problems.push({ field: `params.${key}`, message: `${key} must be a positive integer` });
    } else {
      params[key] = value;
    }
  });
  const { l_min, l_max, o_min, o_max } = params;
  if (l_min !== undefined && l_max !== undefined && o_min !== undefined && o_max !== undefined) {
    if (!(o_min <= o_max && o_max <= l_min && l_min <= l_max)) {
      problems.push({
        field: "params",
        message: "bounds must satisfy o_min <= o_max <= l_min <= l_max",
      });
    }
  }

  if (!/^\d+(\.\d+)?$/.test(draft.costPerNt.trim()) || Number(draft.costPerNt) <= 0) {
    problems.push({ field: "cost", message: "cost per nt must be a positive number" });
  }

  return problems;
}

/** Lossless conversion of a valid draft into the POST body. */
export function draftToSpec(draft: SessionDraft): JobSpec {
  return {
    protein: cleanProtein(draft.protein),
    sites: draft.sites.map((site) => ({
      position: Number(site.position),
      amino_acids: [...site.letters].sort().join(""),
    })),
    params: {
      l_min: Number(draft.params.l_min),
      l_max: Number(draft.params.l_max),
      o_min: Number(draft.params.o_min),
      o_max: Number(draft.params.o_max),
    },
    cost_per_nt: draft.costPerNt.trim(),
  };
}
