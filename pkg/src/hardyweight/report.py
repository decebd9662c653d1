"""Structured outcome of a numerical property check."""

from dataclasses import dataclass, field
from typing import Any, Mapping


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verified claim.

    ``metric`` is the single number the claim is judged by (a minimum margin,
    a maximum violation, ...); its meaning is stated in ``metric_kind``.
    ``passed`` records the comparison against ``threshold`` that was actually
    performed, so a report is self-contained evidence.
    """

    claim: str
    params: Mapping[str, Any]
    metric: float
    threshold: float
    passed: bool
    metric_kind: str = "max_violation"
    details: Mapping[str, Any] = field(default_factory=dict)

    def to_record(self) -> dict:
        """Flat, JSON-friendly representation (stream-record shape)."""
        rec = {
            "claim": self.claim,
            "params": dict(self.params),
            "metric": self.metric,
            "metric_kind": self.metric_kind,
            "threshold": self.threshold,
            "pass": self.passed,
        }
        if self.details:
            rec["details"] = dict(self.details)
        return rec

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        return (
            f"[{status}] {self.claim} {dict(self.params)} "
            f"{self.metric_kind}={self.metric:.6g} threshold={self.threshold:.6g}"
        )
