"""Structured verification reports.

A verifier separates HYPOTHESIS FAILURE (the statement does not apply to this
ring; reported, not an error) from VERIFICATION FAILURE (a counterexample to
the statement's conclusion, which correct code never produces).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..core.ring import FiniteRing

OUTCOME_VERIFIED = "verified"
OUTCOME_NOT_APPLICABLE = "not-applicable"
OUTCOME_COUNTEREXAMPLE = "counterexample"


@dataclass
class HypothesisCheck:
    name: str
    status: str  # "pass" | "fail" | "not-applicable"
    detail: str | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerifyReport:
    theorem: str
    ring_spec: str
    hypotheses: list[HypothesisCheck]
    outcome: str
    counterexample: dict | None
    oracle_agreement: bool | None
    stats: dict[str, int]
    notes: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return self.outcome == OUTCOME_VERIFIED

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "ring": self.ring_spec,
            "outcome": self.outcome,
            "verified": self.verified,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "counterexample": self.counterexample,
            "oracle_agreement": self.oracle_agreement,
            "stats": dict(self.stats),
            "notes": list(self.notes),
        }


class ReportBuilder:
    """Accumulates hypothesis checks, stats and notes for one verifier run."""

    def __init__(self, theorem: str, ring: FiniteRing, spec_label: str | None = None):
        self.theorem = theorem
        self.ring = ring
        # The report names the ring the theorem cell is about; verifiers that
        # build auxiliary objects label counterexamples in those objects but
        # report under the subject ring.
        self.spec_label = spec_label if spec_label is not None else ring.spec_text
        self.hypotheses: list[HypothesisCheck] = []
        self.stats: dict[str, int] = {"elements_checked": 0, "witnesses_produced": 0}
        self.notes: list[str] = []
        self.counterexample: dict | None = None
        self.oracle_agreement: bool | None = None

    def hypothesis(self, name: str, ok: bool, detail: str | None = None) -> bool:
        self.hypotheses.append(
            HypothesisCheck(name, "pass" if ok else "fail", detail)
        )
        return ok

    def note(self, text: str) -> None:
        self.notes.append(text)

    def checked(self, n: int = 1) -> None:
        self.stats["elements_checked"] += n

    def witnessed(self, n: int = 1) -> None:
        self.stats["witnesses_produced"] += n

    def fail(self, element: int | None, detail: str, pair: tuple[int, int] | None = None) -> None:
        if self.counterexample is None:
            ce: dict = {"detail": detail}
            if element is not None:
                ce["index"] = element
                ce["label"] = self.ring.element_label(element)
            if pair is not None:
                ce["pair"] = list(pair)
            self.counterexample = ce

    def not_applicable(self) -> VerifyReport:
        return VerifyReport(
            theorem=self.theorem,
            ring_spec=self.spec_label,
            hypotheses=self.hypotheses,
            outcome=OUTCOME_NOT_APPLICABLE,
            counterexample=None,
            oracle_agreement=None,
            stats=self.stats,
            notes=self.notes,
        )

    def finish(self) -> VerifyReport:
        if any(h.status == "fail" for h in self.hypotheses):
            return self.not_applicable()
        outcome = OUTCOME_COUNTEREXAMPLE if self.counterexample else OUTCOME_VERIFIED
        return VerifyReport(
            theorem=self.theorem,
            ring_spec=self.spec_label,
            hypotheses=self.hypotheses,
            outcome=outcome,
            counterexample=self.counterexample,
            oracle_agreement=self.oracle_agreement,
            stats=self.stats,
            notes=self.notes,
        )
