from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence

MATCH = "match"
MISMATCH = "mismatch"


@dataclass(frozen=True)
class Verdict:
    """Outcome of comparing two coefficient sequences.

    ``first_diff`` is ``(n, left, right)`` for the smallest index where the
    sequences disagree and is present exactly when ``status`` is mismatch.
    Exact rationals are carried as strings so the tuple stays JSON-safe.
    """

    status: str
    first_diff: Optional[tuple[int, Any, Any]] = None
    note: str = ""

    def __post_init__(self):
        if self.status not in (MATCH, MISMATCH):
            raise ValueError(f"unknown status {self.status!r}")
        if (self.first_diff is None) != (self.status == MATCH):
            raise ValueError("first_diff must be given exactly for a mismatch")

    @property
    def ok(self) -> bool:
        return self.status == MATCH

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "first_diff": list(self.first_diff) if self.first_diff else None,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Verdict:
        fd = d.get("first_diff")
        return cls(d["status"], tuple(fd) if fd is not None else None, d.get("note", ""))


def compare(left: Sequence[int], right: Sequence[int], start: int = 0,
            note: str = "") -> Verdict:
    """Compare two equal-length sequences; index labels begin at ``start``."""
    if len(left) != len(right):
        raise ValueError(f"length mismatch: {len(left)} != {len(right)}")
    for i, (a, b) in enumerate(zip(left, right)):
        if a != b:
            return Verdict(MISMATCH, (i + start, a, b), note)
    return Verdict(MATCH, None, note)
