"""Verification reports shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def jsonable(value: Any) -> Any:
    """Convert a value to plain JSON types; integers become decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items.sort(key=repr)
        return items
    if isinstance(value, float):
        return value
    return str(value)


@dataclass
class Check:
    name: str
    inputs: dict
    expected: Any
    actual: Any
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": jsonable(self.inputs),
            "expected": jsonable(self.expected),
            "actual": jsonable(self.actual),
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, inputs: dict, expected: Any, actual: Any) -> bool:
        ok = expected == actual
        self.checks.append(Check(name, dict(inputs), expected, actual, ok))
        return ok

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        return self

    def __bool__(self) -> bool:
        return self.overall

    def to_dict(self) -> dict:
        return {
            "overall": self.overall,
            "n_checks": len(self.checks),
            "n_failed": len(self.failures),
            "checks": [c.to_dict() for c in self.checks],
        }
