"""Optimal partition of a degenerate coding sequence into oligo sets.

An assembly design covers the n-nucleotide template with consecutive
spans; neighbouring spans share an overlap that anneals during assembly.
Every span is synthesized once per combination of decodon choices at the
mutation sites it touches, so its synthesis cost is

    (span length) x (product of per-site decodon counts in the span)

and the design objective is the sum of those costs.  A dynamic program
over prefix end positions finds the global minimum.

Overlap windows are required to stay clear of mutation-site codons.
Two reasons, both practical: a degenerate position inside an overlap
would have to agree across two independently synthesized sets, which
collapses the combinatorics (only matching variant pairs anneal), and a
codon straddling a span boundary outside the shared window cannot be
assembled from independent decodon choices at all.  Keeping sites out
of overlaps makes every oligo set's variants pair with every
neighbouring variant, so the assembled library is exactly the requested
combinatorial one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from decimal import Decimal

from .core import (
    DegenSeq,
    Decodon,
    format_iupac,
    mask_bases,
    parse_iupac,
    reverse_complement,
    translate_dna,
)

_INF = float("inf")


class InfeasibleDesign(Exception):
    """No legal partition exists for the template and parameters."""


class LibraryTooLarge(Exception):
    """Exhaustive expansion would exceed the guard; use the analytic statistics."""


@dataclass(frozen=True)
class OligoParams:
    """Length bounds for oligos and overlaps, in nucleotides.

    Requires 0 < o_min <= o_max <= l_min <= l_max.  o_max is allowed to
    reach l_min (an overlap may cover a whole shortest-length oligo);
    each junction separately requires its overlap to be shorter than the
    oligo it extends.
    """

    l_min: int = 40
    l_max: int = 90
    o_min: int = 20
    o_max: int = 40

    def __post_init__(self) -> None:
        if not (0 < self.o_min <= self.o_max <= self.l_min <= self.l_max):
            raise ValueError(
                "oligo parameters must satisfy 0 < o_min <= o_max <= l_min <= l_max, "
                f"got (l_min={self.l_min}, l_max={self.l_max}, "
                f"o_min={self.o_min}, o_max={self.o_max})"
            )

    def describe(self) -> str:
        return (
            f"l_min={self.l_min}, l_max={self.l_max}, "
            f"o_min={self.o_min}, o_max={self.o_max}"
        )


@dataclass(frozen=True)
class MutationSite:
    """One varied residue: 1-based position, target set, witness decodons."""

    residue_index: int
    target: int
    decodons: tuple[Decodon, ...]

    def __post_init__(self) -> None:
        if self.residue_index < 1:
            raise ValueError(f"residue index {self.residue_index} must be >= 1")
        if not self.decodons:
            raise ValueError("a mutation site needs at least one decodon")
        if self.target <= 0:
            raise ValueError("empty target amino-acid set")

    @property
    def count(self) -> int:
        return len(self.decodons)

    @property
    def dna_start(self) -> int:
        return 3 * (self.residue_index - 1)

    @property
    def dna_end(self) -> int:
        return 3 * self.residue_index


@dataclass(frozen=True)
class DesignJob:
    template: DegenSeq
    sites: tuple[MutationSite, ...]
    params: OligoParams
    cost_rate: Decimal = Decimal("0.38")

    def __post_init__(self) -> None:
        if not self.template:
            raise ValueError("empty template")
        if len(self.template) % 3:
            raise ValueError(f"template length {len(self.template)} is not a multiple of 3")
        ordered = tuple(sorted(self.sites, key=lambda s: s.residue_index))
        object.__setattr__(self, "sites", ordered)
        m = len(self.template) // 3
        seen: set[int] = set()
        for site in ordered:
            if site.residue_index > m:
                raise ValueError(
                    f"site position {site.residue_index} beyond protein length {m}"
                )
            if site.residue_index in seen:
                raise ValueError(f"duplicate site position {site.residue_index}")
            seen.add(site.residue_index)

    @property
    def n(self) -> int:
        return len(self.template)


@dataclass(frozen=True)
class OligoSetSpan:
    start: int
    end: int
    multiplicity: int

    @property
    def length(self) -> int:
        return self.end - self.start

    @property
    def nt_cost(self) -> int:
        return self.length * self.multiplicity


@dataclass(frozen=True)
class Partition:
    spans: tuple[OligoSetSpan, ...]
    total_nt: int


@dataclass(frozen=True)
class OligoSet:
    """All variant sequences of one span, as IUPAC text on one strand."""

    index: int
    start: int
    end: int
    strand: str
    sequences: tuple[str, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.sequences)


def _site_intervals(sites: tuple[MutationSite, ...]) -> list[tuple[int, int, int]]:
    return [(s.dna_start, s.dna_end, s.count) for s in sites]


def span_multiplicity(start: int, end: int, sites: tuple[MutationSite, ...]) -> int:
    """Product of decodon counts over sites whose codon intersects [start, end).

    A site inside an overlap region intersects both neighbouring spans
    and multiplies both; the optimizer never produces such layouts, but
    the function stays general for hand-built partitions.
    """
    mult = 1
    for s in sites:
        if s.dna_start < end and s.dna_end > start:
            mult *= s.count
    return mult


def optimize(job: DesignJob) -> Partition:
    """Minimum-synthesis partition via prefix dynamic programming.

    c[i] is the optimal cost of covering [0, i); c[0] = 0.  A span of
    length j ending at i either starts the design (start = i - j = 0,
    no overlap) or extends a prefix ending at start + k for an overlap
    length k, where the window [start, start + k) must avoid all site
    codons and k < j keeps the span from vanishing into its overlap.
    Ties prefer the smaller span length, then the smaller overlap, so
    reconstruction is deterministic.
    """
    n = job.n
    p = job.params
    intervals = _site_intervals(job.sites)

    def mult(a: int, b: int) -> int:
        m = 1
        for s, e, c in intervals:
            if s < b and e > a:
                m *= c
        return m

    def window_clear(a: int, b: int) -> bool:
        return not any(s < b and e > a for s, e, _ in intervals)

    cost: list[float] = [_INF] * (n + 1)
    cost[0] = 0
    parent: list[tuple[int, int] | None] = [None] * (n + 1)
    for i in range(p.l_min, n + 1):
        for j in range(p.l_min, p.l_max + 1):
            start = i - j
            if start < 0:
                break
            span_cost = j * mult(start, i)
            if start == 0:
                if span_cost < cost[i]:
                    cost[i] = span_cost
                    parent[i] = (j, 0)
                continue
            for k in range(p.o_min, min(p.o_max, j - 1) + 1):
                prev = cost[start + k]
                if prev == _INF:
                    continue
                if not window_clear(start, start + k):
                    continue
                candidate = prev + span_cost
                if candidate < cost[i]:
                    cost[i] = candidate
                    parent[i] = (j, k)

    if cost[n] == _INF:
        raise InfeasibleDesign(
            f"no feasible partition: n={n}, params=({p.describe()})"
        )

    spans: list[OligoSetSpan] = []
    i = n
    while True:
        j, k = parent[i]  # type: ignore[misc]
        start = i - j
        spans.append(OligoSetSpan(start, i, mult(start, i)))
        if k == 0:
            break
        i = start + k
    spans.reverse()
    total = sum(s.nt_cost for s in spans)
    assert total == int(cost[n])
    return Partition(tuple(spans), total)


def brute_force_optimize(job: DesignJob, guard_n: int = 400) -> int:
    """Exhaustive minimum over all legal (length, overlap) sequences.

    Test oracle for ``optimize``:  depth-first enumeration from the
    left edge, pruned by an admissible completion bound and by cost
    dominance per end position.  Dominance is sound because the set of
    legal completions depends only on the end coordinate: o_max <= l_min
    guarantees any overlap fits inside any previously placed span.
    """
    n = job.n
    if n > guard_n:
        raise ValueError(f"brute force guarded to n <= {guard_n}, got {n}")
    p = job.params
    intervals = _site_intervals(job.sites)

    def mult(a: int, b: int) -> int:
        m = 1
        for s, e, c in intervals:
            if s < b and e > a:
                m *= c
        return m

    def window_clear(a: int, b: int) -> bool:
        return not any(s < b and e > a for s, e, _ in intervals)

    advance = p.l_max - p.o_min

    def lower_bound(end: int) -> int:
        gap = n - end
        if gap == 0:
            return 0
        extra_spans = -(-gap // advance)
        return gap + extra_spans * p.o_min

    best: list[float] = [_INF]
    seen: dict[int, int] = {}

    def rec(end: int, cost: int) -> None:
        if cost + lower_bound(end) >= best[0]:
            return
        prev = seen.get(end)
        if prev is not None and cost >= prev:
            return
        seen[end] = cost
        for k in range(p.o_min, p.o_max + 1):
            start = end - k
            if start < 0:
                continue
            if not window_clear(start, end):
                continue
            for j in range(p.l_max, max(p.l_min, k + 1) - 1, -1):
                nxt = start + j
                if nxt > n:
                    continue
                c2 = cost + j * mult(start, nxt)
                if nxt == n:
                    if c2 < best[0]:
                        best[0] = c2
                else:
                    rec(nxt, c2)

    for j in range(p.l_max, p.l_min - 1, -1):
        if j > n:
            continue
        c0 = j * mult(0, j)
        if j == n:
            if c0 < best[0]:
                best[0] = c0
        else:
            rec(j, c0)

    if best[0] == _INF:
        raise InfeasibleDesign(
            f"no feasible partition: n={n}, params=({p.describe()})"
        )
    return int(best[0])


def emit_oligos(
    partition: Partition, job: DesignJob, antisense_alternate: bool = False
) -> list[OligoSet]:
    """One IUPAC sequence per decodon combination for each span.

    Substitution happens on a full-template copy before slicing, so a
    codon only partially inside a span contributes just its in-span
    symbols (relevant only for hand-built partitions; optimized ones
    keep sites whole).  With ``antisense_alternate`` the odd-indexed
    sets are stored reverse-complemented and labeled as minus-strand.
    """
    out: list[OligoSet] = []
    for idx, span in enumerate(partition.spans):
        hit = [
            s for s in job.sites if s.dna_start < span.end and s.dna_end > span.start
        ]
        minus = antisense_alternate and idx % 2 == 1
        seqs: list[str] = []
        for combo in itertools.product(*(s.decodons for s in hit)):
            symbols = list(job.template)
            for site, decodon in zip(hit, combo):
                symbols[site.dna_start:site.dna_end] = decodon.masks
            piece: DegenSeq = tuple(symbols[span.start:span.end])
            if minus:
                piece = reverse_complement(piece)
            seqs.append(format_iupac(piece))
        out.append(
            OligoSet(
                index=idx,
                start=span.start,
                end=span.end,
                strand="-" if minus else "+",
                sequences=tuple(seqs),
            )
        )
    return out


def assemble_library(oligo_sets: list[OligoSet], max_members: int = 10**6) -> set[str]:
    """In-silico assembly: join agreeing variants, expand, translate.

    Variants of consecutive sets join only when their shared window
    matches symbol for symbol.  Assembled coding sequences expand over
    all degenerate positions and translate; proteins containing a stop
    anywhere are rejected.  Raises LibraryTooLarge past ``max_members``
    expansions (use the analytic statistics in libstats instead).
    """
    ordered = sorted(oligo_sets, key=lambda s: s.start)
    normalized: list[tuple[int, int, list[DegenSeq]]] = []
    for s in ordered:
        variants = [parse_iupac(text) for text in s.sequences]
        if s.strand == "-":
            variants = [reverse_complement(v) for v in variants]
        normalized.append((s.start, s.end, variants))

    proteins: set[str] = set()
    expanded = 0

    def finish(seq: DegenSeq) -> None:
        nonlocal expanded
        members = 1
        for m in seq:
            members *= len(mask_bases(m))
        expanded += members
        if expanded > max_members:
            raise LibraryTooLarge(
                f"library expansion exceeds {max_members} members; "
                "use analytic statistics (libstats) instead"
            )
        for bases in itertools.product(*(mask_bases(m) for m in seq)):
            protein = translate_dna("".join(bases))
            if "*" not in protein:
                proteins.add(protein)

    def extend(i: int, acc: DegenSeq, acc_end: int) -> None:
        if i == len(normalized):
            finish(acc)
            return
        start, end, variants = normalized[i]
        shared = acc_end - start
        for v in variants:
            if shared > 0 and acc[-shared:] != v[:shared]:
                continue
            extend(i + 1, acc + v[shared:], end)

    first_start, first_end, first_variants = normalized[0]
    if first_start != 0:
        raise ValueError("first oligo set must start at position 0")
    for v in first_variants:
        extend(1, v, first_end)
    return proteins


def baseline_sites(sites: tuple[MutationSite, ...]) -> tuple[MutationSite, ...]:
    """Sites rewritten to a single covering decodon each (count 1)."""
    from .baseline import best_single_decodon

    return tuple(
        replace(s, decodons=(best_single_decodon(s.target).decodon,)) for s in sites
    )
