"""Report data model and deterministic serialization.

Reports must be byte-identical across runs with the same configuration, so
serialization avoids anything environment-dependent: JSON is emitted by a
small canonical writer (sorted keys, ASCII escapes, floats rendered with 17
significant digits, newline-terminated) and CSV uses a fixed column order
with the same float rendering.  No timestamps, no hostnames.

Every check record carries a relation identifier from a closed vocabulary
(RELATION_TAGS); "derived" marks checks that verify this package's own
plumbing rather than a relation from the verified construction.
"""

import csv
import io
import json
import math
from dataclasses import dataclass, field

__all__ = [
    "CSV_COLUMNS",
    "RELATION_TAGS",
    "VERSION",
    "CheckRecord",
    "VerificationReport",
    "canonical_json",
    "serialize_report",
]

VERSION = "0.1.0"

RELATION_TAGS = frozenset(
    {
        "deformed-commutation",
        "ladder-number-commutator",
        "bracket-diagonal",
        "number-shift",
        "bracket-shift",
        "bracket-symmetry",
        "gate-table",
        "gate-involution",
        "phase-inverse",
        "gate-closure",
        "ratio-audit",
        "toffoli-literal-audit",
        "convention-audit",
        "classical-limit",
        "constraint-verdict",
        "derived",
    }
)

CSV_COLUMNS = (
    "check_id",
    "relation",
    "convention",
    "params",
    "residual",
    "threshold",
    "passed",
    "notes",
)


@dataclass
class CheckRecord:
    """One verification outcome.

    residual and threshold may be None for checks that are not residual-shaped
    (for example determinism or schema checks); passed is always explicit.
    """

    check_id: str
    relation: str
    convention: str
    params: dict
    residual: float | None
    threshold: float | None
    passed: bool
    notes: str = ""

    def __post_init__(self):
        if self.relation not in RELATION_TAGS:
            raise ValueError(f"unknown relation tag {self.relation!r}")
        if self.residual is not None:
            self.residual = float(self.residual)
        if self.threshold is not None:
            self.threshold = float(self.threshold)
        self.passed = bool(self.passed)


@dataclass
class VerificationReport:
    """A configuration, the active conventions, and the resulting check records."""

    version: str
    config: dict
    conventions: dict
    records: list = field(default_factory=list)

    def summary(self) -> dict:
        passed = sum(1 for r in self.records if r.passed)
        return {"total": len(self.records), "passed": passed, "failed": len(self.records) - passed}

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    def as_dict(self) -> dict:
        return {
            "tool": "qgatelab",
            "version": self.version,
            "config": dict(self.config),
            "conventions": dict(self.conventions),
            "summary": self.summary(),
            "records": [
                {
                    "check_id": r.check_id,
                    "relation": r.relation,
                    "convention": r.convention,
                    "params": r.params,
                    "residual": r.residual,
                    "threshold": r.threshold,
                    "passed": r.passed,
                    "notes": r.notes,
                }
                for r in self.records
            ],
        }


def _format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"non-finite value {value!r} cannot enter a report")
    return format(float(value), ".17g")


def _emit(value, parts: list) -> None:
    if value is None:
        parts.append("null")
    elif value is True:
        parts.append("true")
    elif value is False:
        parts.append("false")
    elif isinstance(value, str):
        parts.append(json.dumps(value, ensure_ascii=True))
    elif isinstance(value, int):
        parts.append(str(value))
    elif isinstance(value, float):
        parts.append(_format_float(value))
    elif isinstance(value, dict):
        parts.append("{")
        for pos, key in enumerate(sorted(value)):
            if not isinstance(key, str):
                raise TypeError(f"report keys must be strings, got {key!r}")
            if pos:
                parts.append(",")
            parts.append(json.dumps(key, ensure_ascii=True))
            parts.append(":")
            _emit(value[key], parts)
        parts.append("}")
    elif isinstance(value, (list, tuple)):
        parts.append("[")
        for pos, item in enumerate(value):
            if pos:
                parts.append(",")
            _emit(item, parts)
        parts.append("]")
    else:
        raise TypeError(f"value {value!r} of type {type(value).__name__} cannot enter a report")


def canonical_json(value) -> str:
    """Deterministic JSON: sorted keys, ASCII, %.17g floats, no whitespace."""
    parts = []
    _emit(value, parts)
    return "".join(parts)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, (dict, list, tuple)):
        return canonical_json(value)
    return str(value)


def serialize_report(report: VerificationReport, fmt: str) -> bytes:
    """Render a report as canonical JSON or CSV bytes (UTF-8, newline-terminated)."""
    if fmt == "json":
        return (canonical_json(report.as_dict()) + "\n").encode("utf-8")
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in report.records:
            writer.writerow(
                [
                    record.check_id,
                    record.relation,
                    record.convention,
                    canonical_json(record.params),
                    _csv_cell(record.residual),
                    _csv_cell(record.threshold),
                    _csv_cell(record.passed),
                    record.notes,
                ]
            )
        return buffer.getvalue().encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
