"""Check results shared by the verification machinery and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal

Expectation = Literal["holds", "fails", "report"]


@dataclass
class CheckResult:
    """Outcome of one exact identity check.

    ``holds`` is what was computed.  ``expect`` records what counts as
    agreement with the documented mathematics: ``"fails"`` marks a known
    negative result, ``"report"`` a claim that is computed and flagged but
    does not gate anything.
    """

    name: str
    holds: bool
    details: dict[str, Any] = field(default_factory=dict)
    expect: Expectation = "holds"

    @property
    def ok(self) -> bool:
        if self.expect == "report":
            return True
        return self.holds == (self.expect == "holds")

    @property
    def status(self) -> str:
        if self.expect == "report":
            return "flagged" if not self.holds else "pass"
        if self.expect == "fails":
            return "expected-failure" if not self.holds else "unexpected-pass"
        return "pass" if self.holds else "fail"

    def expecting(self, expect: Expectation) -> "CheckResult":
        self.expect = expect
        return self

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "ok": self.ok,
            "holds": self.holds,
            "expect": self.expect,
            "details": self.details,
        }


def combine(name: str, results: list[CheckResult], expect: Expectation = "holds") -> CheckResult:
    """Fold sub-checks into one result that holds iff every sub-check holds."""
    failing = [r for r in results if not r.holds]
    details: dict[str, Any] = {"count": len(results), "failures": len(failing)}
    if failing:
        details["first_failure"] = {"name": failing[0].name, **failing[0].details}
    return CheckResult(name, not failing, details, expect)
