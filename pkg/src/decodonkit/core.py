"""Genetic-code and IUPAC-sequence algebra.

Nucleotide sets are 4-bit masks (A=1, C=2, G=4, T=8), so every IUPAC
one-letter code maps to one of the 15 nonempty masks.  Amino-acid sets
are 20-bit masks over the fixed alphabetical ordering
``ACDEFGHIKLMNPQRSTVWY`` (bit 0 = A ... bit 19 = Y); that bit order is
part of the on-disk table format and must never change.

Everything in this module is a pure function over immutable values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

import numpy as np

# --- nucleotide masks -------------------------------------------------------

BASE_BIT = {"A": 1, "C": 2, "G": 4, "T": 8}

# Index i is the IUPAC symbol whose mask is i; index 0 is unused.
MASK_TO_SYMBOL = "?ACMGRSVTWYHKDBN"

SYMBOL_TO_MASK = {sym: mask for mask, sym in enumerate(MASK_TO_SYMBOL) if mask}

#: A degenerate sequence is a tuple of nucleotide masks, one per position.
DegenSeq = tuple[int, ...]


def mask_bases(mask: int) -> list[str]:
    """Concrete bases of a mask, always in A < C < G < T order."""
    return [b for b in "ACGT" if mask & BASE_BIT[b]]


def complement_mask(mask: int) -> int:
    """Bitwise base complement (A<->T, C<->G); maps R<->Y, K<->M, B<->V, D<->H."""
    return (
        ((mask & 1) << 3)
        | ((mask & 8) >> 3)
        | ((mask & 2) << 1)
        | ((mask & 4) >> 1)
    )


def parse_iupac(text: str) -> DegenSeq:
    """Parse IUPAC nucleotide text (case-insensitive) into a mask tuple."""
    seq = []
    for i, ch in enumerate(text):
        mask = SYMBOL_TO_MASK.get(ch.upper())
        if mask is None:
            raise ValueError(f"position {i + 1}: invalid IUPAC symbol {ch!r}")
        seq.append(mask)
    return tuple(seq)


def format_iupac(seq: Iterable[int]) -> str:
    return "".join(MASK_TO_SYMBOL[m] for m in seq)


def reverse_complement(seq: DegenSeq) -> DegenSeq:
    return tuple(complement_mask(m) for m in reversed(seq))


# --- genetic code -----------------------------------------------------------

STOP = "*"

_BASES_TCAG = "TCAG"
_CODE_TCAG = "FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG"

GENETIC_CODE: dict[str, str] = {
    "".join(codon): aa
    for codon, aa in zip(itertools.product(_BASES_TCAG, repeat=3), _CODE_TCAG)
}

STOP_CODONS = frozenset(c for c, aa in GENETIC_CODE.items() if aa == STOP)

AA_ORDER = "ACDEFGHIKLMNPQRSTVWY"
AA_INDEX = {aa: i for i, aa in enumerate(AA_ORDER)}
AA_SET_ALL = (1 << 20) - 1

# Highest-usage codon per amino acid in E. coli K-12; any deterministic
# choice works because fixed positions are synthesized once per oligo set
# and therefore do not change any cost total.
DEFAULT_CODON_TABLE: dict[str, str] = {
    "A": "GCG", "C": "TGC", "D": "GAT", "E": "GAA", "F": "TTT",
    "G": "GGC", "H": "CAT", "I": "ATT", "K": "AAA", "L": "CTG",
    "M": "ATG", "N": "AAC", "P": "CCG", "Q": "CAG", "R": "CGT",
    "S": "AGC", "T": "ACC", "V": "GTG", "W": "TGG", "Y": "TAT",
}


def translate_codon(codon: str) -> str:
    """Translate one concrete codon; returns ``*`` for the three stops."""
    return GENETIC_CODE[codon]


def translate_dna(dna: str) -> str:
    """Translate a concrete coding sequence (length divisible by 3)."""
    if len(dna) % 3:
        raise ValueError(f"coding sequence length {len(dna)} is not a multiple of 3")
    return "".join(GENETIC_CODE[dna[i:i + 3]] for i in range(0, len(dna), 3))


def aa_set_from_letters(letters: str) -> int:
    """20-bit amino-acid mask from one-letter codes; rejects unknowns and empty."""
    mask = 0
    for i, ch in enumerate(letters):
        idx = AA_INDEX.get(ch.upper())
        if idx is None:
            raise ValueError(f"position {i + 1}: invalid amino-acid letter {ch!r}")
        mask |= 1 << idx
    if not mask:
        raise ValueError("empty amino-acid set")
    return mask


def aa_letters(mask: int) -> str:
    return "".join(aa for aa in AA_ORDER if mask & (1 << AA_INDEX[aa]))


# --- decodons ----------------------------------------------------------------


@dataclass(frozen=True)
class Decodon:
    """A degenerate codon: three nucleotide masks.

    The canonical integer encoding packs the masks into 12 bits,
    ``(b1 << 8) | (b2 << 4) | b3``; there are 15**3 = 3375 valid values.
    """

    b1: int
    b2: int
    b3: int

    def __post_init__(self) -> None:
        for b in (self.b1, self.b2, self.b3):
            if not 1 <= b <= 15:
                raise ValueError(f"nucleotide mask {b} out of range 1..15")

    @property
    def encoding(self) -> int:
        return (self.b1 << 8) | (self.b2 << 4) | self.b3

    @classmethod
    def from_encoding(cls, enc: int) -> "Decodon":
        return cls((enc >> 8) & 0xF, (enc >> 4) & 0xF, enc & 0xF)

    @classmethod
    def from_text(cls, text: str) -> "Decodon":
        seq = parse_iupac(text)
        if len(seq) != 3:
            raise ValueError(f"decodon must be 3 symbols, got {len(seq)}")
        return cls(*seq)

    @property
    def masks(self) -> DegenSeq:
        return (self.b1, self.b2, self.b3)

    def __str__(self) -> str:
        return format_iupac(self.masks)


class DecodonProfile(NamedTuple):
    """Amino-acid content of one decodon's expansion."""

    aa_mask: int
    stop_expansions: int
    total_expansions: int


def expand_decodon(d: Decodon) -> list[str]:
    """All concrete codons of a decodon, in lexicographic A < C < G < T order."""
    return [
        b1 + b2 + b3
        for b1 in mask_bases(d.b1)
        for b2 in mask_bases(d.b2)
        for b3 in mask_bases(d.b3)
    ]


@lru_cache(maxsize=4096)
def _profile_by_encoding(enc: int) -> DecodonProfile:
    codons = expand_decodon(Decodon.from_encoding(enc))
    aa_mask = 0
    stops = 0
    for codon in codons:
        aa = GENETIC_CODE[codon]
        if aa == STOP:
            stops += 1
        else:
            aa_mask |= 1 << AA_INDEX[aa]
    return DecodonProfile(aa_mask, stops, len(codons))


def decodon_profile(d: Decodon) -> DecodonProfile:
    return _profile_by_encoding(d.encoding)


class DecodonProfileArrays(NamedTuple):
    """Column arrays over all 3375 decodons, ascending canonical encoding."""

    encodings: np.ndarray  # uint16
    aa_masks: np.ndarray  # uint32
    stop_expansions: np.ndarray  # uint16
    total_expansions: np.ndarray  # uint8


@lru_cache(maxsize=1)
def all_decodon_profiles() -> DecodonProfileArrays:
    encs, aas, stops, totals = [], [], [], []
    for b1 in range(1, 16):
        for b2 in range(1, 16):
            for b3 in range(1, 16):
                enc = (b1 << 8) | (b2 << 4) | b3
                prof = _profile_by_encoding(enc)
                encs.append(enc)
                aas.append(prof.aa_mask)
                stops.append(prof.stop_expansions)
                totals.append(prof.total_expansions)
    return DecodonProfileArrays(
        np.array(encs, dtype=np.uint16),
        np.array(aas, dtype=np.uint32),
        np.array(stops, dtype=np.uint16),
        np.array(totals, dtype=np.uint8),
    )


# --- reverse translation -----------------------------------------------------


def reverse_translate(protein: str, table: Mapping[str, str] | None = None) -> DegenSeq:
    """Encode a protein with one preferred codon per residue.

    The result length is 3 * len(protein).  Residues missing from the
    table raise with the 1-based position and the offending letter.
    """
    if table is None:
        table = DEFAULT_CODON_TABLE
    seq: list[int] = []
    for i, ch in enumerate(protein):
        codon = table.get(ch.upper())
        if codon is None:
            raise ValueError(f"residue {i + 1}: no codon for letter {ch!r}")
        seq.extend(BASE_BIT[b] for b in codon)
    return tuple(seq)
