"""Result records produced by every verification routine."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterable

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class CheckResult:
    id: str
    status: str
    residuals: list[str]
    anchor: str = ""
    detail: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "id": self.id,
            "status": self.status,
            "residuals": list(self.residuals),
            "anchor": self.anchor,
        }
        if self.detail:
            out["detail"] = self.detail
        if timings:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def zero_check(id: str, residuals: Iterable, anchor: str = "", detail: dict | None = None) -> CheckResult:
    """Pass iff every residual prints as the literal ``0``."""
    printed = [str(r) for r in residuals]
    status = PASS if all(r == "0" for r in printed) else FAIL
    return CheckResult(id, status, printed, anchor, dict(detail or {}))


def bool_check(id: str, ok: bool, anchor: str = "", detail: dict | None = None, residuals=()) -> CheckResult:
    """Structural check; a failure must still carry a nonzero residual string."""
    printed = [str(r) for r in residuals]
    if ok:
        printed = printed or ["0"]
        status = PASS if all(r == "0" for r in printed) else FAIL
    else:
        status = FAIL
        printed = [r for r in printed if r != "0"] or ["mismatch"]
    return CheckResult(id, status, printed, anchor, dict(detail or {}))


def not_applicable(id: str, reason: str, anchor: str = "", residuals=()) -> CheckResult:
    return CheckResult(id, NOT_APPLICABLE, [str(r) for r in residuals], anchor, {"reason": reason})


@contextmanager
def timed(results: list[CheckResult]):
    """Attribute the wall time of the block evenly to the checks it appends."""
    start = time.perf_counter()
    before = len(results)
    yield
    new = results[before:]
    if new:
        per = (time.perf_counter() - start) * 1000.0 / len(new)
        for r in new:
            r.elapsed_ms = per
