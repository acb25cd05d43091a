/**
 * Wire types for the decodonkit service. These mirror the JSON the
 * service actually sends; the UI renders the string fields verbatim
 * and never recomputes any of them.
 */

export interface Params {
  l_min: number;
  l_max: number;
  o_min: number;
  o_max: number;
}

export interface SiteSpec {
  position: number;
  amino_acids: string;
}

/** The job document POSTed to /api/design (protein input only in the UI). */
export interface JobSpec {
  protein: string;
  sites: SiteSpec[];
  params: Params;
  cost_per_nt: string;
}

export interface WitnessEntry {
  decodon: string;
  expansions: string[];
  amino_acids: string;
}

export interface BaselinePayload {
  decodon: string;
  amino_acids: string;
  extras: string;
  stop_expansions: number;
  total_expansions: number;
  desired_expansions: number;
  undesired_expansions: number;
}

export interface DecodonsResponse {
  amino_acids: string;
  rank: number;
  witness: WitnessEntry[];
  baseline: BaselinePayload;
}

export interface SpanPayload {
  index: number;
  start: number;
  end: number;
  length: number;
  multiplicity: number;
  nt: number;
}

export interface PartitionReport {
  spans: SpanPayload[];
  total_nt: number;
  cost: string;
}

export interface SiteReport {
  position: number;
  amino_acids: string;
  rank: number;
  decodons: string[];
  baseline_decodon: string;
  baseline_extras: string;
  baseline_stop_expansions: number;
  baseline_desired_expansions: number;
  baseline_undesired_expansions: number;
}

export interface LibraryReport {
  target_size: string;
  baseline_size: string;
  baseline_desired_fraction: string;
  baseline_one_in: string;
  codon_level_desired_fraction?: string;
}

export interface DesignReport {
  schema: string;
  protein_length: number;
  dna_length: number;
  params: Params;
  cost_per_nt: string;
  sites: SiteReport[];
  targeted: PartitionReport;
  baseline: PartitionReport;
  library: LibraryReport;
}

export interface OligoSetPayload {
  index: number;
  start: number;
  end: number;
  strand: string;
  sequences: string[];
}

export type OligosPayload =
  | { count: number; inline: true; sets: OligoSetPayload[] }
  | { count: number; inline: false; token: string };

export interface DesignResponse {
  report: DesignReport;
  oligos: OligosPayload;
}

export interface HealthResponse {
  status: string;
  table_version: number;
}
