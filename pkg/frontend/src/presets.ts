/** Preloadable example drafts (the bundled service cases). */

import { blankDraft, type SessionDraft } from "./draft";

export interface Preset {
  id: string;
  label: string;
  draft: () => SessionDraft;
}

function withSites(protein: string, sites: [number, string][]): SessionDraft {
  const draft = blankDraft();
  draft.protein = protein;
  draft.sites = sites.map(([position, letters]) => ({
    position: String(position),
    letters: new Set(letters),
  }));
  return draft;
}

export const PRESETS: Preset[] = [
  {
    id: "pili",
    label: "Pilin peptide, three sites",
    draft: () =>
      withSites("FTLIELLIPQFSCYRVKCYN", [
        [5, "EADKR"],
        [9, "PAG"],
        [15, "RAKED"],
      ]),
  },
  {
    id: "gfp",
    label: "GFP, seven sites",
    draft: () =>
      withSites(
        "MSKGEELFTGVVPILVELDGDVNGHKFSVSGEGEGDATYGKLTLKFICTTGKLPVPWPTLVTTFTYGVQCFSRYPDHMKQHDFFKSAMPEGYVQERTIFFKDDGNYKTRAEVKFEGDTLVNRIELKGIDFKEDGNILGHKLEYNYNSHNVYIMADKQKNGIKVNFKIRHNIEDGSVQLADHYQQNTPIGDGPVLLPDNHYLSTQSALSKDPNEKRDHMVLLEFVTAAGITHGMDELYK",
        [
          [10, "EG"],
          [53, "LV"],
          [73, "AR"],
          [124, "EK"],
          [161, "IV"],
          [162, "KR"],
          [228, "GS"],
        ],
      ),
  },
];
