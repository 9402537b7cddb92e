"""Uniform result type for verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of an exhaustive exact check.

    ``violations`` holds (site, expected, got) triples; the sweep passes
    iff it is empty.  ``checked`` counts every evaluated instance, and
    ``violation_count`` the total number of failures even when the stored
    list is truncated.
    """

    suite: str
    checked: int = 0
    violations: list[tuple[Any, Any, Any]] = field(default_factory=list)
    violation_count: int = 0
    max_recorded: int = 100

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def record(self, site: Any, expected: Any, got: Any) -> None:
        self.violation_count += 1
        if len(self.violations) < self.max_recorded:
            self.violations.append((site, expected, got))

    def merge(self, other: "VerificationReport") -> None:
        self.checked += other.checked
        self.violation_count += other.violation_count
        for v in other.violations:
            if len(self.violations) < self.max_recorded:
                self.violations.append(v)

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "passed": self.passed,
            "violation_count": self.violation_count,
            "violations": [
                {"site": list(site) if isinstance(site, tuple) else site,
                 "expected": str(expected), "got": str(got)}
                for site, expected, got in self.violations
            ],
        }

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({self.violation_count} violations)"
        return f"{self.suite}: {status}, {self.checked} checks"
