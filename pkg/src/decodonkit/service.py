"""Stateless HTTP facade for the rank table, designer, and statistics.

Endpoints:

  GET  /api/health            liveness + table version
  GET  /api/decodons?aa=...   rank, witness, baseline for an amino-acid set
  POST /api/design            job spec in, report + oligo payload out
  GET  /api/oligos?token=...  streamed FASTA for large designs

The rank table is loaded once at startup (path from ``table_path`` or
the DECODON_TABLE environment variable) and never mutated, so request
handling is lock-free.  Responses depend only on (request, table);
every non-2xx response carries exactly one error object of the shape
``{"error": {"code", "message"}}``.

Design computation runs under a per-request time budget (default 10 s,
DECODON_BUDGET to override) and answers 422 when exhausted.  Oligo
payloads are inlined up to 10**4 sequences; larger designs get a
stateless download token (compressed job spec) for the streaming
endpoint instead.
"""

from __future__ import annotations

import asyncio
import base64
import json
import os
import zlib
from typing import Any, Iterator

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, StreamingResponse
from starlette.concurrency import run_in_threadpool
from starlette.exceptions import HTTPException as StarletteHTTPException

from .baseline import baseline_site_stats, best_single_decodon
from .core import aa_letters, aa_set_from_letters, decodon_profile, expand_decodon
from .jobspec import JobSpecError, parse_jobspec
from .libstats import design_report
from .mindecodon import DecodonTable, TableFormatError, load_table
from .oligobreak import DesignJob, InfeasibleDesign, emit_oligos, optimize

INLINE_OLIGO_LIMIT = 10**4
DEFAULT_BUDGET_S = 10.0

_SERVICE_KEYS = {"antisense_alternate", "inline_oligos"}


class ApiException(Exception):
    def __init__(self, status: int, code: str, message: str):
        self.status = status
        self.code = code
        self.message = message


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": {"code": code, "message": message}},
    )


def _witness_payload(table: DecodonTable, target: int) -> list[dict]:
    payload = []
    for decodon in table.witness(target):
        prof = decodon_profile(decodon)
        payload.append(
            {
                "decodon": str(decodon),
                "expansions": expand_decodon(decodon),
                "amino_acids": aa_letters(prof.aa_mask),
            }
        )
    return payload


def _baseline_payload(target: int) -> dict:
    choice = best_single_decodon(target)
    desired, undesired = baseline_site_stats(target)
    prof = decodon_profile(choice.decodon)
    return {
        "decodon": str(choice.decodon),
        "amino_acids": aa_letters(prof.aa_mask),
        "extras": aa_letters(choice.extra_aas),
        "stop_expansions": choice.stop_expansions,
        "total_expansions": choice.total_expansions,
        "desired_expansions": desired,
        "undesired_expansions": undesired,
    }


def encode_oligos_token(spec: dict, antisense_alternate: bool) -> str:
    doc = {"spec": spec, "antisense_alternate": antisense_alternate}
    raw = zlib.compress(json.dumps(doc, sort_keys=True).encode("utf-8"), level=9)
    return base64.urlsafe_b64encode(raw).decode("ascii").rstrip("=")


def decode_oligos_token(token: str) -> tuple[dict, bool]:
    try:
        padded = token + "=" * (-len(token) % 4)
        raw = zlib.decompress(base64.urlsafe_b64decode(padded.encode("ascii")))
        doc = json.loads(raw)
        return doc["spec"], bool(doc["antisense_alternate"])
    except Exception as exc:
        raise ApiException(400, "bad_token", f"undecodable oligos token: {exc}") from exc


def _fasta_stream(job: DesignJob, antisense_alternate: bool) -> Iterator[str]:
    partition = optimize(job)
    for oset in emit_oligos(partition, job, antisense_alternate):
        chunk: list[str] = []
        for v, seq in enumerate(oset.sequences):
            chunk.append(
                f">set={oset.index} span={oset.start}..{oset.end} "
                f"variant={v} strand={oset.strand}\n{seq}\n"
            )
        yield "".join(chunk)


def create_app(
    table_path: str | None = None,
    static_dir: str | None = None,
    budget_s: float | None = None,
) -> FastAPI:
    app = FastAPI(title="decodonkit", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    if budget_s is None:
        budget_s = float(os.environ.get("DECODON_BUDGET", DEFAULT_BUDGET_S))

    resolved = table_path or os.environ.get("DECODON_TABLE")
    table: DecodonTable | None = None
    table_error = "no table path configured (set DECODON_TABLE)"
    if resolved:
        try:
            table = load_table(resolved)
            table_error = ""
        except (OSError, TableFormatError) as exc:
            table_error = str(exc)

    def require_table() -> DecodonTable:
        if table is None:
            raise ApiException(503, "table_unavailable", table_error)
        return table

    @app.exception_handler(ApiException)
    async def _api_exc(_req: Request, exc: ApiException) -> JSONResponse:
        return _error_response(exc.status, exc.code, exc.message)

    @app.exception_handler(RequestValidationError)
    async def _schema_exc(_req: Request, exc: RequestValidationError) -> JSONResponse:
        return _error_response(400, "invalid_request", str(exc))

    @app.exception_handler(StarletteHTTPException)
    async def _http_exc(_req: Request, exc: StarletteHTTPException) -> JSONResponse:
        return _error_response(exc.status_code, "http_error", str(exc.detail))

    @app.get("/api/health")
    async def health() -> JSONResponse:
        if table is None:
            return _error_response(503, "table_unavailable", table_error)
        return JSONResponse({"status": "ok", "table_version": table.version})

    @app.get("/api/decodons")
    async def decodons(aa: str = "") -> JSONResponse:
        tbl = require_table()
        try:
            target = aa_set_from_letters(aa)
        except ValueError as exc:
            raise ApiException(400, "invalid_letters", str(exc)) from exc
        witness = _witness_payload(tbl, target)
        return JSONResponse(
            {
                "amino_acids": aa_letters(target),
                "rank": len(witness),
                "witness": witness,
                "baseline": _baseline_payload(target),
            }
        )

    @app.post("/api/design")
    async def design(body: dict[str, Any]) -> JSONResponse:
        tbl = require_table()
        antisense = bool(body.get("antisense_alternate", False))
        inline_flag = body.get("inline_oligos")
        spec = {k: v for k, v in body.items() if k not in _SERVICE_KEYS}
        try:
            job = parse_jobspec(spec, tbl)
        except JobSpecError as exc:
            raise ApiException(400, "invalid_spec", str(exc)) from exc

        def compute() -> tuple[dict, list, int]:
            report = design_report(job)
            partition = optimize(job)
            count = sum(s.multiplicity for s in partition.spans)
            sets = (
                emit_oligos(partition, job, antisense)
                if count <= INLINE_OLIGO_LIMIT
                else []
            )
            return report, sets, count

        try:
            report, sets, count = await asyncio.wait_for(
                run_in_threadpool(compute), timeout=budget_s
            )
        except asyncio.TimeoutError:
            raise ApiException(
                422, "budget_exceeded",
                f"design exceeded the {budget_s:g}s computation budget",
            ) from None
        except InfeasibleDesign as exc:
            raise ApiException(422, "infeasible", str(exc)) from exc

        if count <= INLINE_OLIGO_LIMIT:
            oligos: dict[str, Any] = {
                "count": count,
                "inline": True,
                "sets": [
                    {
                        "index": s.index,
                        "start": s.start,
                        "end": s.end,
                        "strand": s.strand,
                        "sequences": list(s.sequences),
                    }
                    for s in sets
                ],
            }
        elif inline_flag is True:
            raise ApiException(
                413, "too_large",
                f"{count} oligo sequences exceed the inline limit of "
                f"{INLINE_OLIGO_LIMIT}; fetch them via the token instead",
            )
        else:
            oligos = {
                "count": count,
                "inline": False,
                "token": encode_oligos_token(spec, antisense),
            }
        return JSONResponse({"report": report, "oligos": oligos})

    @app.get("/api/oligos")
    async def oligos(token: str = "") -> StreamingResponse:
        tbl = require_table()
        spec, antisense = decode_oligos_token(token)
        try:
            job = parse_jobspec(spec, tbl)
        except JobSpecError as exc:
            raise ApiException(400, "invalid_spec", str(exc)) from exc
        try:
            optimize(job)
        except InfeasibleDesign as exc:
            raise ApiException(422, "infeasible", str(exc)) from exc
        return StreamingResponse(
            _fasta_stream(job, antisense),
            media_type="text/plain; charset=utf-8",
            headers={"Content-Disposition": "attachment; filename=oligos.fasta"},
        )

    if static_dir is None:
        static_dir = os.environ.get("DECODON_STATIC")
    if static_dir and os.path.isdir(static_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def main() -> None:
    import uvicorn

    port = int(os.environ.get("DECODON_PORT", "8080"))
    uvicorn.run(create_app(), host="0.0.0.0", port=port)


if __name__ == "__main__":
    main()
