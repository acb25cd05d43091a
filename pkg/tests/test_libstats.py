import json
from decimal import Decimal

import pytest

from decodonkit.core import aa_set_from_letters, reverse_translate
from decodonkit.libstats import YieldReport, compare, design_report, library_size, money
from decodonkit.oligobreak import DesignJob, MutationSite, OligoParams


def job_for(table, protein: str, letter_sites: dict[int, str], rate="0.38") -> DesignJob:
    sites = tuple(
        MutationSite(pos, aa_set_from_letters(aas), tuple(table.witness(aa_set_from_letters(aas))))
        for pos, aas in letter_sites.items()
    )
    return DesignJob(reverse_translate(protein), sites, OligoParams(), Decimal(rate))


PILI = "FTLIELLIPQFSCYRVKCYN"
PILI_SITES = {5: "EADKR", 9: "PAG", 15: "RAKED"}


def test_money_quantizes_to_cents():
    assert money(480, Decimal("0.38")) == Decimal("182.40")
    assert str(money(60, Decimal("0.38"))) == "22.80"
    assert str(money(1, Decimal("0.333"))) == "0.33"


def test_library_size_products(table):
    assert library_size(job_for(table, PILI, PILI_SITES)) == 75
    gfp_like = {2: "EG", 4: "LV", 6: "AR", 8: "EK", 10: "IV", 12: "KR", 14: "GS"}
    assert library_size(job_for(table, "A" * 20, gfp_like)) == 128
    assert library_size(job_for(table, "A" * 20, {10: "M"})) == 1
    assert library_size(job_for(table, "A" * 20, {})) == 1


def test_pili_comparison(table):
    report = compare(job_for(table, PILI, PILI_SITES))
    assert report.targeted_total_nt == 480
    assert report.baseline_total_nt == 60
    assert report.targeted_cost == Decimal("182.40")
    assert report.baseline_cost == Decimal("22.80")
    assert report.target_size == 75
    assert report.baseline_size == 324
    assert report.baseline_desired_fraction == pytest.approx(75 / 324)
    assert report.codon_level_desired_fraction is None


def test_rank_one_sites_match_baseline_span_costs(table):
    # every site codable by one decodon: targeted and baseline partitions
    # have identical multiplicities, so synthesis costs agree
    job = job_for(table, "A" * 30, {5: "EG", 12: "N", 20: "FILMV"})
    report = compare(job)
    assert all(len(s.decodons) == 1 for s in job.sites)
    assert report.targeted_total_nt == report.baseline_total_nt
    assert report.targeted_cost == report.baseline_cost


def test_cost_scales_linearly_with_rate(table):
    single = compare(job_for(table, PILI, PILI_SITES, rate="0.38"))
    double = compare(job_for(table, PILI, PILI_SITES, rate="0.76"))
    assert double.targeted_cost == single.targeted_cost * 2
    assert double.baseline_cost == single.baseline_cost * 2
    assert double.targeted_total_nt == single.targeted_total_nt


def test_codon_level_fraction(table):
    job = job_for(table, "A" * 20, {10: "NS"})
    report = compare(job, codon_level=True)
    # ARC covers N and S exactly (4 codons, no extras)
    assert report.baseline_size == 2
    assert report.codon_level_desired_fraction == pytest.approx(1.0)

    job2 = job_for(table, "A" * 20, {10: "AFGILMV"})
    report2 = compare(job2, codon_level=True)
    assert report2.codon_level_desired_fraction == pytest.approx(10 / 18)
    assert report2.baseline_desired_fraction == pytest.approx(7 / 12)


def test_empty_site_list_is_trivial(table):
    report = compare(job_for(table, "A" * 20, {}))
    assert isinstance(report, YieldReport)
    assert report.target_size == 1
    assert report.baseline_size == 1
    assert report.baseline_desired_fraction == 1.0
    assert report.targeted_total_nt == report.baseline_total_nt == 60


def test_design_report_shape_and_values(table):
    report = design_report(job_for(table, PILI, PILI_SITES))
    assert report["schema"] == "decodonkit.report/1"
    assert report["protein_length"] == 20
    assert report["dna_length"] == 60
    assert report["cost_per_nt"] == "0.38"
    assert report["targeted"]["total_nt"] == 480
    assert report["targeted"]["cost"] == "182.40"
    assert report["baseline"]["total_nt"] == 60
    assert report["baseline"]["cost"] == "22.80"
    assert [s["rank"] for s in report["sites"]] == [2, 2, 2]
    assert [s["position"] for s in report["sites"]] == [5, 9, 15]
    assert report["sites"][0]["amino_acids"] == "ADEKR"
    assert len(report["sites"][0]["decodons"]) == 2
    lib = report["library"]
    assert lib["target_size"] == "75"
    assert lib["baseline_size"] == "324"
    assert lib["baseline_one_in"] == "4"
    assert "codon_level_desired_fraction" not in lib

    spans = report["targeted"]["spans"]
    assert [s["index"] for s in spans] == list(range(len(spans)))
    assert sum(s["nt"] for s in spans) == 480


def test_design_report_is_json_stable(table):
    job = job_for(table, PILI, PILI_SITES)
    a = json.dumps(design_report(job), indent=2)
    b = json.dumps(design_report(job), indent=2)
    assert a == b
    parsed = json.loads(a)
    assert parsed["library"]["baseline_desired_fraction"] == "0.231481"


def test_design_report_codon_level_key(table):
    report = design_report(job_for(table, "A" * 20, {10: "AFGILMV"}), codon_level=True)
    assert report["library"]["codon_level_desired_fraction"] == "0.555556"
    site = report["sites"][0]
    assert site["baseline_desired_expansions"] == 10
    assert site["baseline_undesired_expansions"] == 8
    assert site["baseline_extras"] == "CRSTW"
    assert site["baseline_stop_expansions"] == 0
