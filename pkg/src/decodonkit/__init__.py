"""decodonkit: synthesis-optimal oligo design for targeted variant libraries."""

from .core import (
    AA_ORDER,
    DEFAULT_CODON_TABLE,
    Decodon,
    DecodonProfile,
    aa_letters,
    aa_set_from_letters,
    decodon_profile,
    expand_decodon,
    format_iupac,
    parse_iupac,
    reverse_complement,
    reverse_translate,
    translate_codon,
    translate_dna,
)
from .baseline import BaselineChoice, baseline_site_stats, best_single_decodon
from .mindecodon import (
    DecodonTable,
    TableFormatError,
    TableMagicError,
    TableTruncatedError,
    TableVersionError,
    build_table,
    load_table,
    save_table,
    validate_witness,
)
from .oligobreak import (
    DesignJob,
    InfeasibleDesign,
    LibraryTooLarge,
    MutationSite,
    OligoParams,
    OligoSet,
    OligoSetSpan,
    Partition,
    assemble_library,
    brute_force_optimize,
    emit_oligos,
    optimize,
    span_multiplicity,
)
from .libstats import YieldReport, compare, design_report, library_size
from .jobspec import JobSpecError, case_path, list_cases, load_case, parse_jobspec

__version__ = "0.1.0"

__all__ = [
    "AA_ORDER",
    "BaselineChoice",
    "DEFAULT_CODON_TABLE",
    "Decodon",
    "DecodonProfile",
    "DecodonTable",
    "DesignJob",
    "InfeasibleDesign",
    "JobSpecError",
    "LibraryTooLarge",
    "MutationSite",
    "OligoParams",
    "OligoSet",
    "OligoSetSpan",
    "Partition",
    "TableFormatError",
    "TableMagicError",
    "TableTruncatedError",
    "TableVersionError",
    "YieldReport",
    "aa_letters",
    "aa_set_from_letters",
    "assemble_library",
    "baseline_site_stats",
    "best_single_decodon",
    "brute_force_optimize",
    "build_table",
    "case_path",
    "compare",
    "decodon_profile",
    "design_report",
    "emit_oligos",
    "expand_decodon",
    "format_iupac",
    "library_size",
    "list_cases",
    "load_case",
    "load_table",
    "optimize",
    "parse_iupac",
    "parse_jobspec",
    "reverse_complement",
    "reverse_translate",
    "save_table",
    "span_multiplicity",
    "translate_codon",
    "translate_dna",
    "validate_witness",
]
