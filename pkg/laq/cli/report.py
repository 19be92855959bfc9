"""
Command reports: one record per CLI invocation, rendered as text or JSON.

A report carries the command, its arguments, the checks it ran (with failure
witnesses), result tables, timing and the exit status. `parse_report`
inverts `emit_json` exactly.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from laq.shared.data_types import CheckResult, jsonable

MISSING = "·"


@dataclass
class Report:
    command: str
    arguments: Dict[str, Any] = field(default_factory=dict)
    checks: List[Dict[str, Any]] = field(default_factory=list)
    tables: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    messages: List[str] = field(default_factory=list)
    timing_seconds: float = 0.0
    exit_status: int = 0

    def add_check(self, name: str, result: CheckResult) -> bool:
        self.checks.append(
            {"name": name, "ok": result.ok, "failure": None if result.ok else result.failure.to_dict()}
        )
        return result.ok

    def add_table(self, name: str, columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
        self.tables[name] = {"columns": list(columns), "rows": [jsonable(list(row)) for row in rows]}

    def note(self, message: str) -> None:
        self.messages.append(message)

    @property
    def all_ok(self) -> bool:
        return all(check["ok"] for check in self.checks)


def emit_json(report: Report) -> str:
    return json.dumps(asdict(report), indent=2, sort_keys=True, ensure_ascii=False)


def parse_report(text: str) -> Report:
    data = json.loads(text)
    return Report(**data)


def _cell(value: Any) -> str:
    return MISSING if value is None else str(value)


def _render_table(columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> List[str]:
    grid = [[str(c) for c in columns]] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(line[k]) for line in grid) for k in range(len(columns))]
    return ["  ".join(text.rjust(widths[k]) for k, text in enumerate(line)) for line in grid]


def _witness_text(failure: Optional[Dict[str, Any]]) -> str:
    if not failure:
        return ""
    witness = ", ".join(f"{key}={value}" for key, value in failure.get("witness", {}).items())
    return f"{failure['message']}" + (f" [{witness}]" if witness else "")


def emit_text(report: Report) -> str:
    lines = [f"laq {report.command}: exit {report.exit_status} ({report.timing_seconds:.3f}s)"]
    if report.arguments:
        lines.append("  " + " ".join(f"{k}={v}" for k, v in sorted(report.arguments.items())))
    if report.checks:
        lines.append("checks:")
        for check in report.checks:
            status = "ok  " if check["ok"] else "FAIL"
            detail = _witness_text(check["failure"])
            lines.append(f"  {status} {check['name']}" + (f": {detail}" if detail else ""))
    for name, table in report.tables.items():
        lines.append(f"{name}:")
        lines.extend("  " + row for row in _render_table(table["columns"], table["rows"]))
    lines.extend(report.messages)
    return "\n".join(lines) + "\n"


__all__ = ["Report", "emit_json", "emit_text", "parse_report"]
