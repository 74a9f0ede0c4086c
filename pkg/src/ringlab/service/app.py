"""The HTTP service: one endpoint per command, wrapping the core package.

Verification outcomes are data, not transport errors: a counterexample still
returns 200 with ``outcome`` set.  Transport-level 422s are reserved for bad
input: parse errors (with position and expected set), semantic elaboration
errors (with the failing sub-expression), size-cap refusals, unknown
theorems (listing the available ids), and bad element literals.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__, documents
from ..corpus import CorpusConfig, run_suite
from ..errors import (
    ElaborationError,
    ParseError,
    RingLabError,
    SizeCapExceeded,
)
from ..ringspec import parse_and_elaborate, parse_element
from ..theorems.registry import THEOREM_IDS, VerifyOptions, run_theorem
from .models import (
    ClassifyRequest,
    DescribeRequest,
    RadicalRequest,
    ReportDocument,
    SearchRequest,
    SuiteRequest,
    VerifyRequest,
)


def _error_detail(exc: RingLabError) -> dict:
    detail = {"error": str(exc), "kind": type(exc).__name__}
    if isinstance(exc, ParseError):
        detail["position"] = exc.position
        detail["expected"] = sorted(exc.expected)
        detail["found"] = exc.found
    if isinstance(exc, ElaborationError):
        detail["expr"] = exc.expr_text
    if isinstance(exc, SizeCapExceeded):
        detail["required"] = exc.required
        detail["cap"] = exc.cap
    return detail


def _ring(spec: str, size_cap: int | None):
    try:
        return parse_and_elaborate(spec, size_cap=size_cap)
    except RingLabError as exc:
        raise HTTPException(status_code=422, detail=_error_detail(exc)) from exc


def create_app() -> FastAPI:
    app = FastAPI(
        title="ringlab",
        version=__version__,
        description=(
            "Finite rings built compositionally, element classification with "
            "explicit witnesses, and constructive verification of clean and "
            "r-clean ring theorems."
        ),
    )

    @app.get("/v1/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/v1/theorems")
    def theorems() -> dict:
        return {"theorems": list(THEOREM_IDS)}

    @app.post("/v1/describe", response_model=ReportDocument)
    def describe(req: DescribeRequest):
        ring = _ring(req.spec, req.size_cap)
        return documents.describe_document(ring, req.spec)

    @app.post("/v1/classify", response_model=ReportDocument)
    def classify(req: ClassifyRequest):
        ring = _ring(req.spec, req.size_cap)
        try:
            x = parse_element(ring, req.element)
        except ValueError as exc:
            raise HTTPException(
                status_code=422,
                detail={"error": str(exc), "kind": "ElementLiteralError"},
            ) from exc
        return documents.classify_document(ring, req.spec, x, req.element)

    @app.post("/v1/verify", response_model=ReportDocument)
    def verify(req: VerifyRequest):
        if req.theorem not in THEOREM_IDS:
            raise HTTPException(
                status_code=422,
                detail={
                    "error": f"unknown theorem id {req.theorem!r}",
                    "kind": "UnknownTheorem",
                    "available": list(THEOREM_IDS),
                },
            )
        if req.orthogonal_interpretation not in ("exclude-trivial", "all-pairs"):
            raise HTTPException(
                status_code=422,
                detail={
                    "error": "orthogonal_interpretation must be "
                             "'exclude-trivial' or 'all-pairs'",
                    "kind": "BadOption",
                },
            )
        ring = _ring(req.spec, req.size_cap)
        opts = VerifyOptions(
            size_cap=req.size_cap,
            deg_f=req.deg_f,
            deg_g=req.deg_g,
            orthogonal_interpretation=req.orthogonal_interpretation,
            poly_budget=req.poly_budget,
        )
        try:
            report = run_theorem(ring, req.theorem, opts, spec_label=req.spec)
        except SizeCapExceeded as exc:
            raise HTTPException(status_code=422, detail=_error_detail(exc)) from exc
        return documents.verify_document(report, req.spec)

    @app.post("/v1/radical", response_model=ReportDocument)
    def radical(req: RadicalRequest):
        ring = _ring(req.spec, req.size_cap)
        return documents.radical_document(ring, req.spec)

    @app.post("/v1/search", response_model=ReportDocument)
    def search(req: SearchRequest):
        ring = _ring(req.spec, req.size_cap)
        return documents.search_document(ring, req.spec, req.criteria())

    @app.post("/v1/suite", response_model=ReportDocument)
    def suite(req: SuiteRequest):
        cfg = CorpusConfig(
            size_cap=req.size_cap,
            deg_f=req.deg_f,
            deg_g=req.deg_g,
            poly_budget=req.poly_budget,
            parallel=req.parallel,
            orthogonal_interpretation=req.orthogonal_interpretation,
        )
        if req.rings is not None:
            cfg.rings = list(req.rings)
        if req.theorems is not None:
            unknown = [t for t in req.theorems if t not in THEOREM_IDS]
            if unknown:
                raise HTTPException(
                    status_code=422,
                    detail={
                        "error": f"unknown theorem ids {unknown}",
                        "kind": "UnknownTheorem",
                        "available": list(THEOREM_IDS),
                    },
                )
            cfg.theorems = list(req.theorems)
        if cfg.orthogonal_interpretation not in ("exclude-trivial", "all-pairs"):
            raise HTTPException(
                status_code=422,
                detail={"error": "bad orthogonal_interpretation", "kind": "BadOption"},
            )
        return run_suite(cfg)

    return app


app = create_app()
