"""Machine-readable outcome of one verification check.

Reports serialize to JSON deterministically: keys keep insertion order,
integers are emitted exactly, and every real is formatted with six decimal
places, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

VERDICTS = ("pass", "fail", "skipped")


@dataclass
class VerificationReport:
    id: str
    subject: str
    values: dict = field(default_factory=dict)
    verdict: str = "pass"
    margin: float | None = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}")
        if self.verdict == "skipped" and "reason" not in self.values:
            raise ValueError("skipped reports must carry a reason value")

    @property
    def passed(self):
        return self.verdict == "pass"

    def one_line(self):
        mark = {"pass": "ok", "fail": "FAIL", "skipped": "skip"}[self.verdict]
        margin = "" if self.margin is None else f"  margin={self.margin:.6f}"
        return f"[{mark:>4}] {self.id:<40} {self.subject}{margin}"


def _emit(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_emit(v)}" for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_emit(v) for v in value) + "]"
    if value is None:
        return "null"
    raise TypeError(f"cannot serialize {type(value)!r}")


def report_to_json(report):
    return _emit(
        {
            "id": report.id,
            "subject": report.subject,
            "values": report.values,
            "verdict": report.verdict,
            "margin": report.margin,
        }
    )


def reports_to_json(reports):
    body = ",\n  ".join(report_to_json(r) for r in reports)
    return "[\n  " + body + "\n]\n" if reports else "[]\n"
