"""Structured verification reports"""

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional


class VerificationError(Exception):
    """A verification check failed; carries the check id, relation label and residual"""

    def __init__(self, check_id: str, label: str, residual: Optional[str] = None):
        self.check_id = check_id
        self.label = label
        self.residual = residual
        message = f"[{check_id}] {label} failed"
        if residual is not None:
            message += f": residual {residual}"
        super().__init__(message)


def render_value(value: Any) -> Any:
    """Rationals as "p/q" strings, integers bare, everything else as text"""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [render_value(v) for v in value]
    return str(value)


@dataclass
class CheckOutcome:
    label: str
    passed: bool
    expected: Any = None
    actual: Any = None
    residual: Optional[str] = None


@dataclass
class VerificationReport:
    """Outcomes of one verification check (one suite at one n)"""

    check_id: str
    outcomes: List[CheckOutcome] = field(default_factory=list)
    error: Optional[str] = None
    duration: float = 0.0

    def record(self, label: str, passed: bool, expected: Any = None, actual: Any = None, residual: Optional[str] = None) -> bool:
        self.outcomes.append(
            CheckOutcome(label, bool(passed), render_value(expected), render_value(actual), residual)
        )
        return bool(passed)

    def expect_equal(self, label: str, expected: Any, actual: Any) -> bool:
        return self.record(label, expected == actual, expected, actual)

    def expect_zero(self, label: str, residual) -> bool:
        """residual must offer is_zero()"""
        zero = residual is None or residual.is_zero()
        return self.record(label, zero, residual=None if zero else str(residual))

    def merge(self, other: "VerificationReport", prefix: str = "") -> None:
        for outcome in other.outcomes:
            self.outcomes.append(
                CheckOutcome(prefix + outcome.label, outcome.passed, outcome.expected, outcome.actual, outcome.residual)
            )
        if other.error and not self.error:
            self.error = other.error

    @property
    def passed(self) -> bool:
        return self.error is None and all(o.passed for o in self.outcomes)

    @property
    def failures(self) -> List[CheckOutcome]:
        return [o for o in self.outcomes if not o.passed]

    def raise_for_failure(self) -> None:
        if self.error:
            raise VerificationError(self.check_id, "execution", self.error)
        for outcome in self.failures:
            raise VerificationError(self.check_id, outcome.label, outcome.residual)

    def summary(self) -> Dict[str, Any]:
        return {
            "check": self.check_id,
            "passed": self.passed,
            "checks": len(self.outcomes),
            "failures": len(self.failures),
        }

    def to_record(self) -> Dict[str, Any]:
        record = asdict(self)
        record["passed"] = self.passed
        record.pop("duration")
        return record
