/** Shared fakes for the DOM tests: canned responses and a recording fetch. */

import type { DesignResponse } from "../src/types";

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export function errorResponse(status: number, code: string, message: string): Response {
  return jsonResponse({ error: { code, message } }, status);
}

export interface RecordedCall {
  url: string;
  init?: RequestInit;
}

export interface FakeFetch {
  fetch: (url: string, init?: RequestInit) => Promise<Response>;
  calls: RecordedCall[];
}

export function fakeFetch(
  handler: (url: string, init?: RequestInit) => Response | Promise<Response>,
): FakeFetch {
  const calls: RecordedCall[] = [];
  return {
    calls,
    fetch: async (url, init) => {
      calls.push({ url, init });
      return handler(url, init);
    },
  };
}

export function aaParam(url: string): string {
  return new URL(url, "http://localhost").searchParams.get("aa") ?? "";
}

/** The pili design exactly as the service reports it. */
export function piliDesignResponse(): DesignResponse {
  const site = (position: number, amino_acids: string, decodons: string[], baseline: string, extras: string, desired: number, undesired: number) => ({
    position,
    amino_acids,
    rank: decodons.length,
    decodons,
    baseline_decodon: baseline,
    baseline_extras: extras,
    baseline_stop_expansions: 0,
    baseline_desired_expansions: desired,
    baseline_undesired_expansions: undesired,
  });
  return {
    report: {
      schema: "decodonkit.report/1",
      protein_length: 20,
      dna_length: 60,
      params: { l_min: 40, l_max: 90, o_min: 20, o_max: 40 },
      cost_per_nt: "0.38",
      sites: [
        site(5, "ADEKR", ["GMM", "ARA"], "RVM", "GNST", 6, 6),
        site(9, "AGP", ["GGA", "SCA"], "SSA", "R", 3, 1),
        site(15, "ADEKR", ["GMM", "ARA"], "RVM", "GNST", 6, 6),
      ],
      targeted: {
        spans: [{ index: 0, start: 0, end: 60, length: 60, multiplicity: 8, nt: 480 }],
        total_nt: 480,
        cost: "182.40",
      },
      baseline: {
        spans: [{ index: 0, start: 0, end: 60, length: 60, multiplicity: 1, nt: 60 }],
        total_nt: 60,
        cost: "22.80",
      },
      library: {
        target_size: "75",
        baseline_size: "324",
        baseline_desired_fraction: "0.231481",
        baseline_one_in: "4",
      },
    },
    oligos: {
      count: 8,
      inline: true,
      sets: [
        {
          index: 0,
          start: 0,
          end: 60,
          strand: "+",
          sequences: [
            "TTTACCCTGATTGAAACCCTGCTGATTCCGCAGTTTAGCTGCTATCGTGTGAAATGCTA",
            "TTTACCCTGATTGCACTGCTGATTCCGCAGTTTAGCTGCTATCGTGTGAAATGCTATAA",
          ],
        },
      ],
    },
  };
}

export function decodonsBody(aa: string) {
  const canned: Record<string, object> = {
    AFGILMV: {
      amino_acids: "AFGILMV",
      rank: 2,
      witness: [
        { decodon: "GSA", expansions: ["GCA", "GGA"], amino_acids: "AG" },
        { decodon: "DTS", expansions: ["ATC", "ATG", "GTC", "GTG", "TTC", "TTG"], amino_acids: "FILMV" },
      ],
      baseline: {
        decodon: "DBS",
        amino_acids: "ACFGILMRSTVW",
        extras: "CRSTW",
        stop_expansions: 0,
        total_expansions: 18,
        desired_expansions: 10,
        undesired_expansions: 8,
      },
    },
    M: {
      amino_acids: "M",
      rank: 1,
      witness: [{ decodon: "ATG", expansions: ["ATG"], amino_acids: "M" }],
      baseline: {
        decodon: "ATG",
        amino_acids: "M",
        extras: "",
        stop_expansions: 0,
        total_expansions: 1,
        desired_expansions: 1,
        undesired_expansions: 0,
      },
    },
  };
  return (
    canned[aa] ?? {
      amino_acids: aa,
      rank: 2,
      witness: [
        { decodon: "GMM", expansions: ["GAA", "GCC"], amino_acids: aa },
        { decodon: "ARA", expansions: ["AAA", "AGA"], amino_acids: aa },
      ],
      baseline: {
        decodon: "RVM",
        amino_acids: aa,
        extras: "",
        stop_expansions: 0,
        total_expansions: 12,
        desired_expansions: 6,
        undesired_expansions: 6,
      },
    }
  );
}
