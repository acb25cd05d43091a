"""Analytic library statistics and targeted-vs-baseline comparison.

Everything here is closed-form: library sizes are products of per-site
set cardinalities, yield fractions are ratios of those products, and
costs come from the two partition optimizations.  No sequence is ever
expanded, so the numbers stay exact for libraries of any size.

Money is computed in Decimal and serialized as a two-decimal string;
library sizes are serialized as decimal strings as well, so downstream
consumers (including the web UI) can render values verbatim without
floating-point drift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from decimal import Decimal
from fractions import Fraction

from .baseline import baseline_site_stats, best_single_decodon
from .core import aa_letters
from .oligobreak import DesignJob, Partition, baseline_sites, optimize


@dataclass(frozen=True)
class YieldReport:
    target_size: int
    baseline_size: int
    baseline_desired_fraction: float
    targeted_total_nt: int
    baseline_total_nt: int
    targeted_cost: Decimal
    baseline_cost: Decimal
    codon_level_desired_fraction: float | None = None


def library_size(job: DesignJob) -> int:
    """Number of distinct target variants: product of set cardinalities."""
    return math.prod(bin(s.target).count("1") for s in job.sites)


def money(nt: int, rate: Decimal) -> Decimal:
    return (rate * nt).quantize(Decimal("0.01"))


def _baseline_job(job: DesignJob) -> DesignJob:
    return replace(job, sites=baseline_sites(job.sites))


def compare(job: DesignJob, codon_level: bool = False) -> YieldReport:
    """Targeted design against the single-decodon baseline.

    The baseline runs the same partition optimization with every site
    carrying one covering decodon (count 1).  Fractions are computed at
    the amino-acid level; pass ``codon_level=True`` to also report the
    expansion-weighted fraction, which differs whenever covering
    decodons encode amino acids unevenly.
    """
    targeted = optimize(job)
    base_job = _baseline_job(job)
    base_part = optimize(base_job)

    target_size = library_size(job)
    baseline_size = 1
    codon_fraction = Fraction(1)
    for site in job.sites:
        choice = best_single_decodon(site.target)
        covered = choice.extra_aas | site.target
        baseline_size *= bin(covered).count("1")
        if codon_level:
            desired, undesired = baseline_site_stats(site.target)
            codon_fraction *= Fraction(desired, desired + undesired)

    fraction = float(Fraction(target_size, baseline_size)) if job.sites else 1.0
    return YieldReport(
        target_size=target_size,
        baseline_size=baseline_size,
        baseline_desired_fraction=fraction,
        targeted_total_nt=targeted.total_nt,
        baseline_total_nt=base_part.total_nt,
        targeted_cost=money(targeted.total_nt, job.cost_rate),
        baseline_cost=money(base_part.total_nt, job.cost_rate),
        codon_level_desired_fraction=(
            float(codon_fraction) if codon_level and job.sites else None
        ),
    )


def _spans_payload(partition: Partition) -> list[dict]:
    return [
        {
            "index": i,
            "start": s.start,
            "end": s.end,
            "length": s.length,
            "multiplicity": s.multiplicity,
            "nt": s.nt_cost,
        }
        for i, s in enumerate(partition.spans)
    ]


def design_report(job: DesignJob, codon_level: bool = False) -> dict:
    """Full JSON-ready design report; shared by the CLI and the service.

    Key order is fixed and values are plain ints, strings, or string
    decimals, so serializing the same job twice is byte-identical.
    """
    targeted = optimize(job)
    base_part = optimize(_baseline_job(job))
    report_yield = compare(job, codon_level=codon_level)

    sites_payload = []
    for site in job.sites:
        choice = best_single_decodon(site.target)
        desired, undesired = baseline_site_stats(site.target)
        sites_payload.append(
            {
                "position": site.residue_index,
                "amino_acids": aa_letters(site.target),
                "rank": site.count,
                "decodons": [str(d) for d in site.decodons],
                "baseline_decodon": str(choice.decodon),
                "baseline_extras": aa_letters(choice.extra_aas),
                "baseline_stop_expansions": choice.stop_expansions,
                "baseline_desired_expansions": desired,
                "baseline_undesired_expansions": undesired,
            }
        )

    library = {
        "target_size": str(report_yield.target_size),
        "baseline_size": str(report_yield.baseline_size),
        "baseline_desired_fraction": format(
            report_yield.baseline_desired_fraction, ".6g"
        ),
        "baseline_one_in": str(
            round(Fraction(report_yield.baseline_size, report_yield.target_size))
        )
        if report_yield.target_size
        else "1",
    }
    if report_yield.codon_level_desired_fraction is not None:
        library["codon_level_desired_fraction"] = format(
            report_yield.codon_level_desired_fraction, ".6g"
        )

    return {
        "schema": "decodonkit.report/1",
        "protein_length": job.n // 3,
        "dna_length": job.n,
        "params": {
            "l_min": job.params.l_min,
            "l_max": job.params.l_max,
            "o_min": job.params.o_min,
            "o_max": job.params.o_max,
        },
        "cost_per_nt": str(job.cost_rate),
        "sites": sites_payload,
        "targeted": {
            "spans": _spans_payload(targeted),
            "total_nt": targeted.total_nt,
            "cost": str(report_yield.targeted_cost),
        },
        "baseline": {
            "spans": _spans_payload(base_part),
            "total_nt": base_part.total_nt,
            "cost": str(report_yield.baseline_cost),
        },
        "library": library,
    }
