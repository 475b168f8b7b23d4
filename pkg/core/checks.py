"""Cross-check records embedded in certificates.

Every certificate lists the verdict of each independent consistency check
that was run while it was built, so a reader can audit what was verified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List

from core.errors import InternalInconsistency


class CheckStatus(str, Enum):
    """Outcome of a single check."""

    PASSED = "passed"
    FAILED = "failed"


@dataclass(slots=True)
class CheckRecord:
    """One named verification with a short human readable detail."""

    name: str
    status: CheckStatus
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED

    def to_dict(self) -> Dict[str, str]:
        return {"name": self.name, "status": self.status.value, "detail": self.detail}


@dataclass(slots=True)
class CheckLedger:
    """Append-only list of check records.

    With ``strict`` set, a failing ``require`` raises immediately.
    """

    strict: bool = True
    records: List[CheckRecord] = field(default_factory=list)

    def require(self, name: str, condition: bool, detail: str = "") -> None:
        status = CheckStatus.PASSED if condition else CheckStatus.FAILED
        self.records.append(CheckRecord(name=name, status=status, detail=detail))
        if not condition and self.strict:
            raise InternalInconsistency(f"check {name!r} failed: {detail}")

    @property
    def all_passed(self) -> bool:
        return all(record.passed for record in self.records)

    def to_list(self) -> List[Dict[str, str]]:
        return [record.to_dict() for record in self.records]


__all__ = ["CheckLedger", "CheckRecord", "CheckStatus"]
