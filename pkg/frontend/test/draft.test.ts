import { describe, expect, it } from "vitest";

import {
  blankDraft,
  cleanProtein,
  draftToSpec,
  validateDraft,
  type SessionDraft,
} from "../src/draft";
import { PRESETS } from "../src/presets";

function fields(draft: SessionDraft): string[] {
  return validateDraft(draft).map((problem) => problem.field);
}

describe("cleanProtein", () => {
  it("uppercases and strips whitespace", () => {
    expect(cleanProtein("mskg\n eelf\tTG")).toBe("MSKGEELFTG");
  });
});

describe("validateDraft", () => {
  it("accepts both bundled presets", () => {
    for (const preset of PRESETS) {
      expect(validateDraft(preset.draft())).toEqual([]);
    }
  });

  it("requires a protein", () => {
    expect(fields(blankDraft())).toEqual(["protein"]);
  });

  it("points at the first bad residue", () => {
    const draft = blankDraft();
    draft.protein = "MKXA";
    const problems = validateDraft(draft);
    expect(problems).toHaveLength(1);
    expect(problems[0].field).toBe("protein");
    expect(problems[0].message).toContain('"X"');
  });

  it("rejects out-of-range, non-numeric, and duplicate site positions", () => {
    const draft = blankDraft();
    draft.protein = "MKLA";
    draft.sites = [
      { position: "9", letters: new Set("AD") },
      { position: "x", letters: new Set("AD") },
      { position: "2", letters: new Set("AD") },
      { position: "2", letters: new Set("AD") },
    ];
    expect(fields(draft)).toEqual(["sites.0", "sites.1", "sites.3"]);
  });

  it("requires at least one amino acid per site", () => {
    const draft = blankDraft();
    draft.protein = "MKLA";
    draft.sites = [{ position: "2", letters: new Set() }];
    expect(fields(draft)).toEqual(["sites.0"]);
  });

  it("rejects non-integer and non-positive oligo bounds", () => {
    const draft = blankDraft();
    draft.protein = "MKLA";
    draft.params.l_min = "forty";
    draft.params.o_min = "0";
    expect(fields(draft)).toEqual(["params.l_min", "params.o_min"]);
  });

  it("enforces o_min <= o_max <= l_min <= l_max as a single params problem", () => {
    const draft = blankDraft();
    draft.protein = "MKLA";
    draft.params.l_max = "30";
    const problems = validateDraft(draft);
    expect(problems).toHaveLength(1);
    expect(problems[0].field).toBe("params");
    expect(problems[0].message).toContain("o_min <= o_max <= l_min <= l_max");
  });

  it("rejects bad costs and accepts decimal strings", () => {
    const good = blankDraft();
    good.protein = "MKLA";
    good.costPerNt = "0.07";
    expect(validateDraft(good)).toEqual([]);
    for (const bad of ["", "-1", "0", "cheap", "1.2.3"]) {
      const draft = blankDraft();
      draft.protein = "MKLA";
      draft.costPerNt = bad;
      expect(fields(draft)).toEqual(["cost"]);
    }
  });
});

describe("draftToSpec", () => {
  it("converts a draft losslessly with sorted site letters", () => {
    const draft = PRESETS[0].draft();
    const spec = draftToSpec(draft);
    expect(spec.protein).toBe("FTLIELLIPQFSCYRVKCYN");
    expect(spec.sites).toEqual([
      { position: 5, amino_acids: "ADEKR" },
      { position: 9, amino_acids: "AGP" },
      { position: 15, amino_acids: "ADEKR" },
    ]);
    expect(spec.params).toEqual({ l_min: 40, l_max: 90, o_min: 20, o_max: 40 });
    expect(spec.cost_per_nt).toBe("0.38");
  });

  it("normalizes whitespace and case in the protein", () => {
    const draft = blankDraft();
    draft.protein = " mk la ";
    draft.sites = [];
    expect(draftToSpec(draft).protein).toBe("MKLA");
  });
});
