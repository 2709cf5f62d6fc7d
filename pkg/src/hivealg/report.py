"""Small shared result types for verification routines."""

from __future__ import annotations

from dataclasses import dataclass


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (pinned data and computation disagree)."""


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        return f"{status}  {self.name}" + (f": {self.detail}" if self.detail else "")


def failures(results: list[CheckResult]) -> list[CheckResult]:
    return [r for r in results if not r.ok]
