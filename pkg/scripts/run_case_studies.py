#!/usr/bin/env python3
"""Run every bundled case and print the cost/yield summary.

Needs a built rank table (see scripts/build_table.py); the path comes
from --table or the DECODON_TABLE environment variable.
"""

import argparse
import os
import sys

from decodonkit import design_report, load_table
from decodonkit.jobspec import list_cases, load_case, parse_jobspec


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--table", default=os.environ.get("DECODON_TABLE"))
    parser.add_argument("cases", nargs="*", help="case names (default: all bundled)")
    args = parser.parse_args()
    if not args.table:
        sys.exit("no table path: pass --table or set DECODON_TABLE")

    table = load_table(args.table)
    names = args.cases or list_cases()
    for name in names:
        spec = load_case(name)
        job = parse_jobspec(spec, table)
        report = design_report(job, codon_level=True)
        lib = report["library"]
        print(f"=== {name} ===")
        print(f"  protein length {report['protein_length']}  dna {report['dna_length']} nt")
        ranks = ", ".join(
            f"{s['position']}:{s['amino_acids']}({s['rank']})" for s in report["sites"]
        )
        print(f"  sites: {ranks}")
        print(
            f"  targeted: {report['targeted']['total_nt']} nt "
            f"over {len(report['targeted']['spans'])} oligo sets, "
            f"${report['targeted']['cost']}"
        )
        print(
            f"  baseline: {report['baseline']['total_nt']} nt "
            f"over {len(report['baseline']['spans'])} oligo sets, "
            f"${report['baseline']['cost']}"
        )
        print(
            f"  library: {lib['target_size']} target / {lib['baseline_size']} baseline "
            f"(desired fraction {lib['baseline_desired_fraction']}, "
            f"1 in {lib['baseline_one_in']})"
        )


if __name__ == "__main__":
    main()
