"""Verdict record shared by the non-congruence checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass
class Report:
    claim: str
    verdict: str
    params: dict = field(default_factory=dict)
    checked: int = 0
    first_failure: Any = None
    detail: str = ""
    elapsed_ms: float | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def __bool__(self):
        return self.passed

    def witness_summary(self) -> dict:
        out = {"checked": self.checked}
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        if self.detail:
            out["detail"] = self.detail
        return out
