"""Outcome values shared by the structural checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Status(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    SKIPPED = "Skipped"
    UNKNOWN = "Unknown"


@dataclass
class Report:
    """Result of one structural check on one instance."""

    status: Status
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @classmethod
    def skipped(cls, reason: str, **detail) -> Report:
        return cls(Status.SKIPPED, {"reason": reason, **detail})
