"""Structured pass/fail records for exact verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Witness:
    """One failing parameter point with both sides of the broken equality."""

    parameters: dict[str, Any]
    computed: Any
    expected: Any


@dataclass
class VerificationReport:
    identity_name: str
    parameter_box: list[tuple[str, str]]
    points_checked: int = 0
    failures: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, parameters: dict[str, Any], computed: Any, expected: Any) -> None:
        """Count one checked point; file a witness if the sides disagree."""
        self.points_checked += 1
        if computed != expected:
            self.failures.append(Witness(dict(parameters), computed, expected))

    def as_dict(self) -> dict[str, Any]:
        return {
            "identity": self.identity_name,
            "box": [f"{name}={span}" for name, span in self.parameter_box],
            "points_checked": self.points_checked,
            "passed": self.passed,
            "failures": [
                {
                    "parameters": {k: str(v) for k, v in w.parameters.items()},
                    "computed": str(w.computed),
                    "expected": str(w.expected),
                }
                for w in self.failures
            ],
            "notes": list(self.notes),
        }
