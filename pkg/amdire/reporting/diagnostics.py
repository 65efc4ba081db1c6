"""Diagnostic output in human and JSON forms."""

from collections.abc import Sequence
from typing import Literal

from pydantic import JsonValue

from amdire.types.diagnostics import Diagnostic, Severity
from amdire.utils import json_dumps

#: Diagnostic output formats
DiagnosticFormat = Literal["human", "json"]

#: JSON output schema version
SCHEMA_VERSION = 1

_COLORS = {Severity.ERROR: "\033[31m", Severity.WARNING: "\033[33m", Severity.INFO: "\033[36m"}
_RESET = "\033[0m"


def summary(diagnostics: Sequence[Diagnostic]) -> dict[str, int]:
    """Count diagnostics by severity.

    Args:
        diagnostics: Diagnostics.

    Returns:
        Counts keyed error, warning, info.
    """
    counts = dict.fromkeys(Severity, 0)
    for diagnostic in diagnostics:
        counts[diagnostic.severity] += 1
    return {severity.value: count for severity, count in counts.items()}


def _human(diagnostic: Diagnostic, *, color: bool) -> list[str]:
    span = diagnostic.span
    severity = str(diagnostic.severity)
    if color:
        severity = f"{_COLORS[diagnostic.severity]}{severity}{_RESET}"
    lines = [
        f"{span.file}:{span.start_line}:{span.start_col}: "
        f"{severity}[{diagnostic.code}] {diagnostic.message}"
    ]
    lines.extend(
        f"    {note.span.file}:{note.span.start_line}:{note.span.start_col}: "
        f"note: {note.note}"
        for note in diagnostic.related
    )
    return lines


def _json(diagnostic: Diagnostic) -> dict[str, JsonValue]:
    span = diagnostic.span
    return {
        "code": diagnostic.code,
        "severity": diagnostic.severity.value,
        "message": diagnostic.message,
        "file": span.file,
        "line": span.start_line,
        "col": span.start_col,
        "related": [
            {
                "file": note.span.file,
                "line": note.span.start_line,
                "col": note.span.start_col,
                "note": note.note,
            }
            for note in diagnostic.related
        ],
    }


def emit_diagnostics(
    diagnostics: Sequence[Diagnostic],
    output_format: DiagnosticFormat = "human",
    *,
    rules_off: Sequence[str] = (),
    color: bool = False,
) -> str:
    """Format diagnostics.

    Diagnostics are emitted in the given order, which callers keep sorted.

    Args:
        diagnostics: Diagnostics.
        output_format: `human` lines or a `json` document.
        rules_off: Codes switched off by the project, listed in JSON output.
        color: Colour severities in human output.

    Returns:
        Text ending with a newline.
    """
    counts = summary(diagnostics)
    if output_format == "json":
        document: dict[str, JsonValue] = {
            "version": SCHEMA_VERSION,
            "summary": counts,  # type: ignore[dict-item]
            "rules_off": list(rules_off),
            "diagnostics": [_json(diagnostic) for diagnostic in diagnostics],
        }
        return json_dumps(document, indent=2) + "\n"
    lines = [line for diagnostic in diagnostics for line in _human(diagnostic, color=color)]
    lines.append(
        f"{counts['error']} error(s), {counts['warning']} warning(s), {counts['info']} info(s)"
    )
    return "\n".join(lines) + "\n"
