"""Verification records and their text / JSON serialisations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

__all__ = ["PASS", "FAIL", "NOT_CHECKED", "VerificationRecord", "format_summary", "records_to_json"]

PASS = "pass"
FAIL = "fail"
NOT_CHECKED = "not-checked"


@dataclass
class VerificationRecord:
    subject: str
    outcome: str
    witnesses: list[Any] = field(default_factory=list)
    numbers: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.outcome not in (PASS, FAIL, NOT_CHECKED):
            raise ValueError(f"unknown outcome {self.outcome!r}")
        if self.outcome == FAIL and not self.witnesses:
            raise ValueError(f"fail record {self.subject!r} must carry a witness")

    @classmethod
    def check(cls, subject: str, ok: bool, witnesses=None, **numbers) -> "VerificationRecord":
        return cls(subject, PASS if ok else FAIL, list(witnesses or []), dict(numbers))

    @property
    def passed(self) -> bool:
        return self.outcome == PASS

    @property
    def failed(self) -> bool:
        return self.outcome == FAIL

    def to_line(self) -> str:
        nums = ",".join(f"{k}={v}" for k, v in self.numbers.items())
        return f"{self.subject}\t{self.outcome}\t{nums}"

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "outcome": self.outcome,
            "witnesses": _jsonable(self.witnesses),
            "numbers": dict(self.numbers),
        }


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def format_summary(records) -> str:
    return "".join(r.to_line() + "\n" for r in records)


def records_to_json(records) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2) + "\n"
