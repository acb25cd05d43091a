"""Job specification documents: validation and bundled example cases.

A job spec is a JSON object:

    {
      "protein": "FTLIE...",          # or "dna": "TTTACC..." (IUPAC, 3m long)
      "sites": [{"position": 5, "amino_acids": "EADKR"}, ...],
      "params": {"l_min": 40, "l_max": 90, "o_min": 20, "o_max": 40},
      "cost_per_nt": 0.38,
      "codon_table": {"U": "TGC"}     # optional per-letter overrides
    }

Positions are 1-based residue indices and must be unique and in range.
``codon_table`` entries for the 20 standard letters must translate back
to that letter; additional letters (noncanonical residues in the input
protein) may map to any concrete codon.  The optional ``name``,
``description`` and ``notes`` keys are ignored metadata.
"""

from __future__ import annotations

import json
from decimal import Decimal, InvalidOperation
from importlib import resources

from .core import (
    AA_INDEX,
    DEFAULT_CODON_TABLE,
    GENETIC_CODE,
    aa_set_from_letters,
    parse_iupac,
    reverse_translate,
)
from .mindecodon import DecodonTable
from .oligobreak import DesignJob, MutationSite, OligoParams

DEFAULT_PARAMS = {"l_min": 40, "l_max": 90, "o_min": 20, "o_max": 40}
DEFAULT_COST_PER_NT = "0.38"

_TOP_KEYS = {
    "protein", "dna", "sites", "params", "cost_per_nt", "codon_table",
    "name", "description", "notes",
}
_SITE_KEYS = {"position", "amino_acids"}
_PARAM_KEYS = set(DEFAULT_PARAMS)


class JobSpecError(ValueError):
    """The spec document violates the schema or its value constraints."""


def _fail(msg: str) -> None:
    raise JobSpecError(msg)


def _codon_table(doc: dict) -> dict[str, str]:
    table = dict(DEFAULT_CODON_TABLE)
    override = doc.get("codon_table", {})
    if not isinstance(override, dict):
        _fail("codon_table must be an object mapping letters to codons")
    for letter, codon in override.items():
        if not isinstance(letter, str) or len(letter) != 1:
            _fail(f"codon_table key {letter!r} is not a single letter")
        if (
            not isinstance(codon, str)
            or len(codon) != 3
            or any(b not in "ACGT" for b in codon.upper())
        ):
            _fail(f"codon_table[{letter!r}]: {codon!r} is not a concrete codon")
        codon = codon.upper()
        letter = letter.upper()
        if letter in AA_INDEX and GENETIC_CODE[codon] != letter:
            _fail(
                f"codon_table[{letter!r}]: codon {codon} translates to "
                f"{GENETIC_CODE[codon]!r}, not {letter!r}"
            )
        table[letter] = codon
    return table


def parse_jobspec(doc: dict, table: DecodonTable) -> DesignJob:
    """Validate a spec document and attach witness decodons to each site."""
    if not isinstance(doc, dict):
        _fail("job spec must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        _fail(f"unknown job spec keys: {sorted(unknown)}")

    has_protein = "protein" in doc
    has_dna = "dna" in doc
    if has_protein == has_dna:
        _fail("exactly one of 'protein' or 'dna' is required")

    if has_protein:
        protein = doc["protein"]
        if not isinstance(protein, str) or not protein:
            _fail("'protein' must be a nonempty string")
        try:
            template = reverse_translate(protein, _codon_table(doc))
        except ValueError as exc:
            _fail(f"protein: {exc}")
    else:
        dna = doc["dna"]
        if not isinstance(dna, str) or not dna:
            _fail("'dna' must be a nonempty string")
        try:
            template = parse_iupac(dna)
        except ValueError as exc:
            _fail(f"dna: {exc}")
        if len(template) % 3:
            _fail(f"dna length {len(template)} is not a multiple of 3")
    m = len(template) // 3

    raw_sites = doc.get("sites", [])
    if not isinstance(raw_sites, list):
        _fail("'sites' must be a list")
    sites: list[MutationSite] = []
    seen_positions: set[int] = set()
    for i, raw in enumerate(raw_sites):
        where = f"sites[{i}]"
        if not isinstance(raw, dict) or set(raw) != _SITE_KEYS:
            _fail(f"{where}: expected keys {sorted(_SITE_KEYS)}")
        position = raw["position"]
        if not isinstance(position, int) or isinstance(position, bool):
            _fail(f"{where}: position must be an integer")
        if not 1 <= position <= m:
            _fail(f"{where}: position {position} outside 1..{m}")
        if position in seen_positions:
            _fail(f"{where}: duplicate position {position}")
        seen_positions.add(position)
        letters = raw["amino_acids"]
        if not isinstance(letters, str):
            _fail(f"{where}: amino_acids must be a string")
        try:
            target = aa_set_from_letters(letters)
        except ValueError as exc:
            _fail(f"{where}: {exc}")
        decodons = tuple(table.witness(target))
        sites.append(MutationSite(position, target, decodons))

    raw_params = doc.get("params", {})
    if not isinstance(raw_params, dict):
        _fail("'params' must be an object")
    unknown = set(raw_params) - _PARAM_KEYS
    if unknown:
        _fail(f"unknown params keys: {sorted(unknown)}")
    values = dict(DEFAULT_PARAMS)
    for key, value in raw_params.items():
        if not isinstance(value, int) or isinstance(value, bool):
            _fail(f"params.{key} must be an integer")
        values[key] = value
    try:
        params = OligoParams(**values)
    except ValueError as exc:
        _fail(str(exc))

    raw_cost = doc.get("cost_per_nt", DEFAULT_COST_PER_NT)
    if isinstance(raw_cost, bool) or not isinstance(raw_cost, (int, float, str)):
        _fail("cost_per_nt must be a number")
    try:
        cost_rate = Decimal(str(raw_cost))
    except InvalidOperation:
        _fail(f"cost_per_nt: {raw_cost!r} is not a number")
    if not cost_rate > 0:
        _fail(f"cost_per_nt must be positive, got {raw_cost!r}")

    try:
        return DesignJob(
            template=template,
            sites=tuple(sites),
            params=params,
            cost_rate=cost_rate,
        )
    except ValueError as exc:
        _fail(str(exc))
    raise AssertionError("unreachable")


def load_jobspec_file(path: str, table: DecodonTable) -> DesignJob:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise JobSpecError(f"{path}: invalid JSON ({exc})") from exc
    return parse_jobspec(doc, table)


def list_cases() -> list[str]:
    """Names of the bundled example job specs."""
    root = resources.files("decodonkit.cases")
    return sorted(
        entry.name[: -len(".json")]
        for entry in root.iterdir()
        if entry.name.endswith(".json")
    )


def load_case(name: str) -> dict:
    root = resources.files("decodonkit.cases")
    entry = root / f"{name}.json"
    try:
        text = entry.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise KeyError(f"no bundled case named {name!r}; have {list_cases()}") from None
    return json.loads(text)


def case_path(name: str) -> str:
    """Filesystem path of a bundled case (for handing to the CLI)."""
    root = resources.files("decodonkit.cases")
    return str(root / f"{name}.json")
