"""Structured check results shared by every suite."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"
STATUSES = (PASS, FAIL, FLAGGED)


@dataclass
class CheckReport:
    """One claim bound to the computation that settles it.

    ``claim`` starts with a locator key (``lemma:...``, ``table:...``) and
    states the checked relation; ``flagged`` marks a known discrepancy in the
    source rather than a failing computation.
    """

    suite: str
    claim: str
    status: str
    evidence: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict[str, Any]:
        return {"suite": self.suite, "claim": self.claim, "status": self.status, "evidence": self.evidence}


def verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def check(suite: str, claim: str, ok: bool, **evidence) -> CheckReport:
    return CheckReport(suite, claim, verdict(ok), dict(evidence))


# JSON document written by ``fnq verify --json``
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["generated", "reports"],
    "additionalProperties": False,
    "properties": {
        "generated": {"type": ["string", "null"]},
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["suite", "claim", "status", "evidence"],
                "additionalProperties": False,
                "properties": {
                    "suite": {"type": "string", "minLength": 1},
                    "claim": {"type": "string", "pattern": "^[a-z-]+(:[^ ]+)? "},
                    "status": {"enum": list(STATUSES)},
                    "evidence": {"type": "object"},
                },
            },
        },
    },
}
