"""Pass/fail records shared by every check in the engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional


@dataclass
class Verdict:
    name: str
    passed: bool
    witness: Optional[Any] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        from .report import jsonable

        out: Dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        if self.details:
            out["details"] = jsonable(self.details)
        return out


def all_passed(name: str, verdicts, **details) -> Verdict:
    verdicts = list(verdicts)
    failed = [v for v in verdicts if not v.passed]
    return Verdict(name, not failed, witness=failed[0].to_dict() if failed else None, details=details)
