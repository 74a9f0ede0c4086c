"""Report documents: the JSON payloads every command produces.

One builder per command.  Field order is fixed, values are plain JSON types,
and ``canonical_json`` is the single serialization used for byte-comparable
output; ``timing_seconds`` is always null in documents so two runs of the
same command serialize identically (clients measure wall time themselves).
"""
from __future__ import annotations

import json

from . import __version__ as _version
from .classify import classify_element, ring_analysis, ring_profile
from .core.ring import FiniteRing
from .theorems.report import VerifyReport

SCHEMA_VERSION = 1
ELEMENT_LIST_LIMIT = 64

SEARCH_FLAGS = [
    "unit",
    "idempotent",
    "nilpotent",
    "regular",
    "unit_regular",
    "central",
    "clean",
    "r_clean",
    "exchange",
]


def document(command: str, spec: str | None, results: list, *,
             notes: list[str] | None = None, extra: dict | None = None) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool": "ringlab",
        "version": _version,
        "command": command,
        "spec": spec,
        "results": results,
        "notes": list(notes or []),
        "timing_seconds": None,
    }
    if extra:
        doc.update(extra)
    return doc


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def element_ref(ring: FiniteRing, index: int | None) -> dict | None:
    if index is None:
        return None
    return {"index": int(index), "label": ring.element_label(int(index))}


def _element_list(ring: FiniteRing, indices) -> list[dict]:
    return [element_ref(ring, i) for i in indices]


def describe_document(ring: FiniteRing, spec: str) -> dict:
    profile = ring_profile(ring)
    a = ring_analysis(ring)
    truncated = ring.order > ELEMENT_LIST_LIMIT
    shown = range(min(ring.order, ELEMENT_LIST_LIMIT))
    result = {
        "order": ring.order,
        "zero": element_ref(ring, ring.zero),
        "one": element_ref(ring, ring.one),
        "elements": _element_list(ring, shown),
        "elements_truncated": truncated,
        "idempotents": _element_list(ring, a.idempotents),
        "units": _element_list(ring, a.units),
        "central_idempotents": _element_list(ring, a.central_idempotents),
        "jacobson_radical": _element_list(ring, a.jacobson),
        "profile": {
            "clean": profile.clean,
            "r_clean": profile.r_clean,
            "regular": profile.regular,
            "local": profile.local,
            "directly_finite": profile.directly_finite,
            "semiperfect": profile.semiperfect,
            "commutative": profile.commutative,
            "failing": {
                k: element_ref(ring, v) for k, v in sorted(profile.failing.items())
            },
        },
    }
    notes = list(profile.notes)
    if ring.order == 1:
        notes.insert(0, "R = 0: most theorems not applicable")
    return document("describe", spec, [result], notes=notes)


def classify_document(ring: FiniteRing, spec: str, x: int, element_text: str) -> dict:
    ec = classify_element(ring, x)
    witnesses = {
        "inverse": element_ref(ring, ec.inverse),
        "nilpotency_exponent": ec.nilpotency_exponent,
        "regular": None if ec.regular_witness is None else {
            "y": element_ref(ring, ec.regular_witness.y)
        },
        "unit_regular": element_ref(ring, ec.unit_regular_witness),
        "clean": None if ec.clean_witness is None else {
            "u": element_ref(ring, ec.clean_witness.u),
            "e": element_ref(ring, ec.clean_witness.e),
        },
        "r_clean": None if ec.r_clean_witness is None else {
            "r": element_ref(ring, ec.r_clean_witness.r),
            "e": element_ref(ring, ec.r_clean_witness.e),
            "y": element_ref(ring, ec.r_clean_witness.y),
        },
        "exchange": element_ref(ring, ec.exchange_witness),
    }
    result = {
        "element": element_ref(ring, x),
        "element_text": element_text,
        "flags": {
            "unit": ec.unit,
            "idempotent": ec.idempotent,
            "nilpotent": ec.nilpotent,
            "regular": ec.regular,
            "unit_regular": ec.unit_regular,
            "central": ec.central,
            "clean": ec.clean,
            "r_clean": ec.r_clean,
            "exchange": ec.exchange,
        },
        "witnesses": witnesses,
    }
    return document("classify", spec, [result])


def verify_document(report: VerifyReport, spec: str) -> dict:
    return document("verify", spec, [report.to_dict()])


def radical_document(ring: FiniteRing, spec: str) -> dict:
    a = ring_analysis(ring)
    result = {"jacobson_radical": _element_list(ring, a.jacobson), "size": len(a.jacobson)}
    return document("radical", spec, [result])


def search_document(ring: FiniteRing, spec: str, criteria: dict[str, bool]) -> dict:
    a = ring_analysis(ring)
    flag_arrays = {
        "unit": a.inverse >= 0,
        "idempotent": a.idempotent_mask,
        "nilpotent": None,  # computed per element below
        "regular": a.regular_y >= 0,
        "unit_regular": a.unit_regular_u >= 0,
        "central": a.central_mask,
        "clean": a.clean_ue[0] >= 0,
        "r_clean": a.rclean_rey[0] >= 0,
        "exchange": a.exchange_e >= 0,
    }
    matches = []
    for x in range(ring.order):
        ok = True
        for flag, wanted in criteria.items():
            if flag == "nilpotent":
                value = a.nilpotency(x) is not None
            else:
                value = bool(flag_arrays[flag][x])
            if value != wanted:
                ok = False
                break
        if ok:
            matches.append(x)
    notes = []
    if criteria.get("r_clean") is True and criteria.get("clean") is False:
        notes.append(
            "r-clean but not clean is empty on every finite ring: a finite ring "
            "has no infinite orthogonal family of idempotents, so it is "
            "semiperfect, and semiperfect rings are clean; the separation needs "
            "infinite objects"
        )
    if not matches:
        notes.append("no elements match the requested flag combination")
    result = {
        "criteria": {k: criteria[k] for k in SEARCH_FLAGS if k in criteria},
        "matches": _element_list(ring, matches),
        "count": len(matches),
    }
    return document("search", spec, [result], notes=notes)


def suite_document(reports: list[dict], skipped: list[dict], corpus: list[str],
                   theorems: list[str], options: dict) -> dict:
    outcomes = [r["outcome"] for r in reports]
    summary = {
        "rings": len(corpus),
        "theorems": len(theorems),
        "cells": len(reports),
        "verified": outcomes.count("verified"),
        "not_applicable": outcomes.count("not-applicable"),
        "counterexamples": outcomes.count("counterexample"),
        "skipped_rings": len(skipped),
    }
    return document(
        "suite",
        None,
        reports,
        extra={
            "corpus": list(corpus),
            "theorems": list(theorems),
            "options": options,
            "skipped": skipped,
            "summary": summary,
        },
    )
