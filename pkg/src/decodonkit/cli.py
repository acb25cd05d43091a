"""Command-line interface.

Subcommands:

  table-build   build the rank table and write it as a DCODTBL1 file
  decodons      rank, witness and optional baseline for an amino-acid set
  design        run a job spec: report JSON plus optional oligo FASTA

The rank table path comes from ``--table`` or the DECODON_TABLE
environment variable.  Exit codes: 0 success, 2 validation problem,
3 infeasible design, 4 I/O or table-format problem.  Output is fully
deterministic: identical inputs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .baseline import baseline_site_stats, best_single_decodon
from .core import aa_letters, aa_set_from_letters, decodon_profile
from .jobspec import JobSpecError, load_jobspec_file
from .libstats import design_report
from .mindecodon import (
    DecodonTable,
    TableFormatError,
    build_table,
    load_table,
    save_table,
)
from .oligobreak import InfeasibleDesign, OligoSet, emit_oligos, optimize

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INFEASIBLE = 3
EXIT_IO = 4

TABLE_ENV = "DECODON_TABLE"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decodonkit",
        description="Design synthesis-optimal oligo sets for targeted variant libraries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("table-build", help="build and save the rank table")
    p_build.add_argument("--out", required=True, help="output path for the table file")

    p_dec = sub.add_parser("decodons", help="rank and witness for an amino-acid set")
    p_dec.add_argument("amino_acids", help="one-letter amino-acid codes, e.g. AFGILMV")
    p_dec.add_argument("--table", default=None, help=f"table path (default ${TABLE_ENV})")
    p_dec.add_argument(
        "--baseline",
        action="store_true",
        help="also show the best single covering decodon and its extras",
    )

    p_des = sub.add_parser("design", help="partition a job spec into oligo sets")
    p_des.add_argument("jobspec", help="path to a job spec JSON file")
    p_des.add_argument("--table", default=None, help=f"table path (default ${TABLE_ENV})")
    p_des.add_argument("--report-out", default=None, help="report JSON path (default stdout)")
    p_des.add_argument("--oligos-out", default=None, help="FASTA path for oligo variants")
    p_des.add_argument(
        "--antisense-alternate",
        action="store_true",
        help="emit odd-indexed oligo sets reverse-complemented",
    )
    return parser


def _resolve_table(path_arg: str | None) -> DecodonTable:
    path = path_arg or os.environ.get(TABLE_ENV)
    if not path:
        raise FileNotFoundError(
            f"no table path: pass --table or set ${TABLE_ENV} "
            "(build one with 'decodonkit table-build --out decodon_table.bin')"
        )
    return load_table(path)


def _cmd_table_build(args: argparse.Namespace) -> int:
    table = build_table()
    save_table(table, args.out)
    for rank, count in sorted(table.rank_histogram().items()):
        print(f"rank {rank}: {count}")
    print(f"total: {sum(table.rank_histogram().values())}")
    print(f"wrote: {args.out}")
    return EXIT_OK


def _cmd_decodons(args: argparse.Namespace) -> int:
    target = aa_set_from_letters(args.amino_acids)
    table = _resolve_table(args.table)
    witness = table.witness(target)
    print(f"amino_acids: {aa_letters(target)}")
    print(f"rank: {len(witness)}")
    for i, decodon in enumerate(witness, start=1):
        prof = decodon_profile(decodon)
        print(
            f"decodon {i}: {decodon} -> {aa_letters(prof.aa_mask)} "
            f"(expansions {prof.total_expansions}, stops {prof.stop_expansions})"
        )
    if args.baseline:
        choice = best_single_decodon(target)
        desired, undesired = baseline_site_stats(target)
        prof = decodon_profile(choice.decodon)
        print(
            f"baseline: {choice.decodon} covers {aa_letters(prof.aa_mask)}; "
            f"extras {aa_letters(choice.extra_aas) or '-'}; "
            f"stops {choice.stop_expansions}; "
            f"expansions {choice.total_expansions} "
            f"({desired} desired, {undesired} undesired)"
        )
    return EXIT_OK


def _fasta_lines(oligo_sets: list[OligoSet]) -> list[str]:
    lines: list[str] = []
    for oset in oligo_sets:
        for v, seq in enumerate(oset.sequences):
            lines.append(
                f">set={oset.index} span={oset.start}..{oset.end} "
                f"variant={v} strand={oset.strand}"
            )
            lines.append(seq)
    return lines


def _cmd_design(args: argparse.Namespace) -> int:
    table = _resolve_table(args.table)
    job = load_jobspec_file(args.jobspec, table)
    report = design_report(job)
    payload = json.dumps(report, indent=2) + "\n"
    if args.report_out:
        with open(args.report_out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    if args.oligos_out:
        oligo_sets = emit_oligos(optimize(job), job, args.antisense_alternate)
        with open(args.oligos_out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(_fasta_lines(oligo_sets)) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table-build":
            return _cmd_table_build(args)
        if args.command == "decodons":
            return _cmd_decodons(args)
        if args.command == "design":
            return _cmd_design(args)
        parser.error(f"unknown command {args.command!r}")
    except (JobSpecError, ValueError) as exc:
        # TableFormatError subclasses ValueError but is an I/O-side problem.
        if isinstance(exc, TableFormatError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except InfeasibleDesign as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
