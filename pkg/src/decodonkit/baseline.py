"""Single-decodon site encoding, the traditional alternative.

One decodon per mutation site keeps synthesis trivial but usually
overshoots the requested amino-acid set.  The selector here picks, among
all 3375 decodons covering the request, the one minimizing the ordered
key (has stop expansions, extra amino-acid count, total expansions,
canonical encoding).  Stop avoidance outranks extra amino acids because
stop codons truncate the product instead of merely diluting the library.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import (
    AA_SET_ALL,
    Decodon,
    aa_set_from_letters,
    decodon_profile,
    expand_decodon,
    translate_codon,
    AA_INDEX,
    STOP,
    all_decodon_profiles,
)


@dataclass(frozen=True)
class BaselineChoice:
    decodon: Decodon
    extra_aas: int  # amino-acid mask of coded-but-unrequested residues
    stop_expansions: int
    total_expansions: int


@lru_cache(maxsize=1)
def _popcount16() -> np.ndarray:
    return np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


def _popcount(values: np.ndarray) -> np.ndarray:
    table = _popcount16()
    v = values.astype(np.uint32)
    return table[v & 0xFFFF].astype(np.int32) + table[v >> 16]


def best_single_decodon(aa_mask: int) -> BaselineChoice:
    """Deterministic covering decodon for a nonempty amino-acid set.

    NNN covers everything, so a candidate always exists.
    """
    if aa_mask <= 0 or aa_mask > AA_SET_ALL:
        raise ValueError(f"amino-acid mask {aa_mask:#x} out of range (empty set is invalid)")
    profiles = all_decodon_profiles()
    covers = np.flatnonzero((profiles.aa_masks & np.uint32(aa_mask)) == aa_mask)
    extras = _popcount(profiles.aa_masks[covers] & np.uint32(~aa_mask & AA_SET_ALL))
    has_stop = (profiles.stop_expansions[covers] > 0).astype(np.int8)
    order = np.lexsort(
        (
            profiles.encodings[covers],
            profiles.total_expansions[covers],
            extras,
            has_stop,
        )
    )
    best = covers[order[0]]
    decodon = Decodon.from_encoding(int(profiles.encodings[best]))
    prof = decodon_profile(decodon)
    return BaselineChoice(
        decodon=decodon,
        extra_aas=prof.aa_mask & ~aa_mask & AA_SET_ALL,
        stop_expansions=prof.stop_expansions,
        total_expansions=prof.total_expansions,
    )


def baseline_site_stats(aa_mask: int) -> tuple[int, int]:
    """Codon-level (desired, undesired) expansion counts of the chosen decodon.

    Stop expansions count as undesired.
    """
    choice = best_single_decodon(aa_mask)
    desired = 0
    for codon in expand_decodon(choice.decodon):
        aa = translate_codon(codon)
        if aa != STOP and aa_mask & (1 << AA_INDEX[aa]):
            desired += 1
    return desired, choice.total_expansions - desired


def baseline_choice_for_letters(letters: str) -> BaselineChoice:
    return best_single_decodon(aa_set_from_letters(letters))
