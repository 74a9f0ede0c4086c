"""Pydantic request/response models for the HTTP API."""
from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class DescribeRequest(BaseModel):
    spec: str
    size_cap: Optional[int] = None


class ClassifyRequest(BaseModel):
    spec: str
    element: str
    size_cap: Optional[int] = None


class VerifyRequest(BaseModel):
    spec: str
    theorem: str
    size_cap: Optional[int] = None
    deg_f: int = 2
    deg_g: int = 4
    poly_budget: int = 20_000
    orthogonal_interpretation: str = "exclude-trivial"


class RadicalRequest(BaseModel):
    spec: str
    size_cap: Optional[int] = None


class SearchRequest(BaseModel):
    spec: str
    size_cap: Optional[int] = None
    unit: Optional[bool] = None
    idempotent: Optional[bool] = None
    nilpotent: Optional[bool] = None
    regular: Optional[bool] = None
    unit_regular: Optional[bool] = None
    central: Optional[bool] = None
    clean: Optional[bool] = None
    r_clean: Optional[bool] = None
    exchange: Optional[bool] = None

    def criteria(self) -> dict[str, bool]:
        out = {}
        for flag in ("unit", "idempotent", "nilpotent", "regular", "unit_regular",
                     "central", "clean", "r_clean", "exchange"):
            value = getattr(self, flag)
            if value is not None:
                out[flag] = value
        return out


class SuiteRequest(BaseModel):
    rings: Optional[list[str]] = None
    theorems: Optional[list[str]] = None
    size_cap: Optional[int] = None
    deg_f: int = 2
    deg_g: int = 4
    poly_budget: int = 20_000
    parallel: int = 0
    orthogonal_interpretation: str = "exclude-trivial"


class ReportDocument(BaseModel):
    """Envelope common to every command's response."""

    schema_version: int
    tool: str
    version: str
    command: str
    spec: Optional[str] = None
    results: list[Any]
    notes: list[str] = Field(default_factory=list)
    timing_seconds: Optional[float] = None
    corpus: Optional[list[str]] = None
    theorems: Optional[list[str]] = None
    options: Optional[dict] = None
    skipped: Optional[list[dict]] = None
    summary: Optional[dict] = None


class ErrorPayload(BaseModel):
    error: str
    kind: str
    position: Optional[int] = None
    expected: Optional[list[str]] = None
    found: Optional[str] = None
    expr: Optional[str] = None
    available: Optional[list[str]] = None
