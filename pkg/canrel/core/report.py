"""
CANREL Reports
Structured check results shared by every checker.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from canrel.core.errors import StructureError


def jsonable(value: Any) -> Any:
    """Turn tuples, sets and frozensets of atoms into nested lists."""
    if isinstance(value, (tuple, list)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=repr)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    return value


@dataclass
class Check:
    """One named condition with its outcome."""

    name: str
    passed: bool
    witness: Any = None
    detail: Optional[str] = None

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise StructureError(f"check {self.name!r} passed but carries a witness")
        if not self.passed and self.witness is None:
            raise StructureError(f"check {self.name!r} failed without a witness")

    def as_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            data["witness"] = jsonable(self.witness)
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass
class Report:
    """Ordered list of checks about one subject, plus free-form notes."""

    subject: str
    checks: List[Check] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(
        self,
        name: str,
        passed: bool,
        witness: Any = None,
        detail: Optional[str] = None,
    ) -> Check:
        check = Check(name, passed, None if passed else witness, detail)
        self.checks.append(check)
        return check

    def check(self, name: str, result) -> Check:
        """Record an `(ok, witness)` pair as returned by `equal`."""
        ok, witness = result
        return self.add(name, ok, witness)

    def extend(self, prefix: str, other: "Report") -> "Report":
        for check in other.checks:
            self.checks.append(
                Check(f"{prefix}.{check.name}", check.passed, check.witness, check.detail)
            )
        self.notes.extend(f"{prefix}: {note}" for note in other.notes)
        return self

    def get(self, name: str) -> Optional[Check]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def summary(self) -> Dict[str, int]:
        failed = len(self.failures)
        return {
            "total": len(self.checks),
            "passed": len(self.checks) - failed,
            "failed": failed,
        }

    def as_dict(self) -> Dict[str, Any]:
        return {
            "kind": "report",
            "subject": self.subject,
            "checks": [check.as_dict() for check in self.checks],
            "notes": list(self.notes),
            "summary": self.summary(),
        }
