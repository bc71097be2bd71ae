"""Decision reports and their deterministic serialisation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

SCHEMA_VERSION = "hyperint/1"

VERDICTS = ("n-integral", "not-n-integral", "in-Zp", "not-in-Zp", "inconclusive")
NEGATIVE = ("not-n-integral", "not-in-Zp")


@dataclass
class CriterionReport:
    verdict: str | None
    route: str
    witness: dict[str, Any] | None = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict is not None and self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict in NEGATIVE and self.witness is None:
            raise ValueError("a negative verdict needs a witness")

    @property
    def holds(self) -> bool:
        return self.verdict in ("n-integral", "in-Zp")

    @property
    def negative(self) -> bool:
        return self.verdict in NEGATIVE


def to_plain(obj: Any) -> Any:
    """Recursively turn rationals into "num/den" strings and tuples into lists."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if hasattr(obj, "__str__"):
        return str(obj)
    raise TypeError(obj)


def make_record(command: str, inputs: dict, report: CriterionReport) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "command": command,
        "inputs": to_plain(inputs),
        "verdict": report.verdict,
        "route": report.route,
        "witness": to_plain(report.witness),
        "metadata": to_plain(report.metadata),
    }


def dump_record(record: dict) -> str:
    return json.dumps(record, indent=2, ensure_ascii=False)
