"""Check results and report export."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Any, Optional

SCHEMA_VERSION = 1


class CheckStatus(Enum):
    """Outcome of a single numerical check."""

    PASSED = auto()
    FAILED = auto()
    SKIPPED = auto()  # Not applicable for the requested parameters


@dataclass
class CheckResult:
    """One named check with its residual and threshold."""

    name: str
    status: CheckStatus
    residual: Optional[float] = None
    tolerance: Optional[float] = None
    details: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def compare(
        cls,
        name: str,
        residual: float,
        tolerance: float,
        **details: Any,
    ) -> "CheckResult":
        """PASSED iff residual is finite and at most the tolerance."""
        residual = float(residual)
        ok = residual == residual and residual <= tolerance
        return cls(
            name=name,
            status=CheckStatus.PASSED if ok else CheckStatus.FAILED,
            residual=residual,
            tolerance=tolerance,
            details=details,
        )

    @property
    def passed(self) -> bool:
        return self.status is not CheckStatus.FAILED


def _jsonable(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "item") and callable(value.item):
        return _jsonable(value.item())
    return value


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, complex):
        return f"{value.real:.17g}{value.imag:+.17g}j"
    return str(value)


@dataclass
class Report:
    """Result of one CLI suite: checks plus an optional data table."""

    command: str
    config: dict[str, Any] = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)
    columns: list[str] = field(default_factory=list)
    rows: list[list[Any]] = field(default_factory=list)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def add_row(self, *values: Any) -> None:
        self.rows.append(list(values))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_checks(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status is CheckStatus.FAILED]

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "config": _jsonable(self.config),
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status.name.lower(),
                    "residual": c.residual,
                    "tolerance": c.tolerance,
                    "details": _jsonable(c.details),
                }
                for c in self.checks
            ],
            "columns": list(self.columns),
            "rows": _jsonable(self.rows),
        }

    def export_json(self, indent: int = 2) -> str:
        """Export report as JSON string."""
        return json.dumps(self.to_dict(), indent=indent)

    def export_csv(self) -> str:
        """Export the table; falls back to the check list when no table was produced."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if self.columns:
            writer.writerow(self.columns)
            for row in self.rows:
                writer.writerow([_csv_cell(v) for v in row])
        else:
            writer.writerow(["check", "status", "residual", "tolerance"])
            for c in self.checks:
                writer.writerow([
                    c.name,
                    c.status.name.lower(),
                    "" if c.residual is None else _csv_cell(c.residual),
                    "" if c.tolerance is None else _csv_cell(c.tolerance),
                ])
        return buffer.getvalue()
