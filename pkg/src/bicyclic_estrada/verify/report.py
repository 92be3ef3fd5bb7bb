from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

CONFIRMED = "confirmed"
REFUTED = "refuted"
UNDETERMINED = "undetermined"
INAPPLICABLE = "inapplicable"

EXIT_CODES = {CONFIRMED: 0, REFUTED: 1, UNDETERMINED: 2, INAPPLICABLE: 0}


@dataclass
class Instance:
    description: str
    outcome: str
    margin: Optional[float] = None
    K: Optional[int] = None
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        d = {
            "description": self.description,
            "outcome": self.outcome,
            "margin": None if self.margin is None else float(f"{self.margin:.12g}"),
            "K": self.K,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class VerificationReport:
    """Per-instance outcomes for one statement.

    ``inapplicable`` instances (hypotheses not met, or recorded only as
    observations) do not influence the overall outcome.
    """

    statement: str
    instances: list[Instance] = field(default_factory=list)
    runtime_ms: float = 0.0

    def add(self, description: str, outcome: str, margin=None, K=None, witness=None) -> Instance:
        inst = Instance(description, outcome, margin, K, witness)
        self.instances.append(inst)
        return inst

    def count(self, outcome: str) -> int:
        return sum(1 for i in self.instances if i.outcome == outcome)

    @property
    def outcome(self) -> str:
        if self.count(REFUTED):
            return REFUTED
        if self.count(UNDETERMINED):
            return UNDETERMINED
        if self.count(CONFIRMED):
            return CONFIRMED
        return INAPPLICABLE

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.outcome]

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "statement": self.statement,
            "outcome": self.outcome,
            "instances": [i.to_dict() for i in self.instances],
            "runtime_ms": round(self.runtime_ms, 3) if timing else 0,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def summary(self) -> str:
        parts = [f"{o}={self.count(o)}" for o in (CONFIRMED, REFUTED, UNDETERMINED, INAPPLICABLE) if self.count(o)]
        return f"{self.statement}: {self.outcome} ({', '.join(parts) or 'no instances'})"


@contextmanager
def timed(report: VerificationReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.runtime_ms = (time.perf_counter() - start) * 1000.0


REPORT_SCHEMA = {
    "type": "object",
    "required": ["statement", "instances", "runtime_ms"],
    "properties": {
        "statement": {"type": "string"},
        "outcome": {"enum": [CONFIRMED, REFUTED, UNDETERMINED, INAPPLICABLE]},
        "runtime_ms": {"type": "number", "minimum": 0},
        "instances": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["description", "outcome", "margin", "K"],
                "properties": {
                    "description": {"type": "string"},
                    "outcome": {"enum": [CONFIRMED, REFUTED, UNDETERMINED, INAPPLICABLE]},
                    "margin": {"type": ["number", "null"]},
                    "K": {"type": ["integer", "null"]},
                    "witness": {"type": "object"},
                },
            },
        },
    },
}
