"""Diagnostics and rule metadata."""

from collections.abc import Iterable
from enum import StrEnum
from typing import Literal

from pydantic import Field

from amdire.types import FrozenModel
from amdire.types.syntax import Span

#: Pipeline phase emitting a rule
RulePhase = Literal["lex", "parse", "manifest", "tailor", "link", "validate"]


class Severity(StrEnum):
    """Diagnostic severity."""

    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


class RelatedNote(FrozenModel):
    """Secondary location attached to a diagnostic."""

    span: Span
    note: str


class Diagnostic(FrozenModel):
    """Located, coded and severity-tagged finding."""

    code: str
    severity: Severity
    message: str
    span: Span
    related: tuple[RelatedNote, ...] = ()
    item: str | None = Field(
        default=None,
        exclude=True,
        description="Content item the finding is scoped to, if any.",
    )

    @property
    def sort_key(self) -> tuple[str, int, int, str, str]:
        """Ordering key (file, line, column, code, message)."""
        span = self.span
        return span.file, span.start_line, span.start_col, self.code, self.message


class Rule(FrozenModel):
    """Diagnostic rule metadata."""

    code: str = Field(pattern=r"^(AMD|ARD)\d{3}$")
    title: str
    default_severity: Severity
    scope: str
    anchor: str
    phase: RulePhase

    def diagnostic(
        self,
        message: str,
        span: Span,
        *,
        related: tuple[RelatedNote, ...] = (),
        item: str | None = None,
    ) -> Diagnostic:
        """Create a finding of this rule with its default severity.

        Args:
            message: Message naming the offending element.
            span: Location.
            related: Secondary locations.
            item: Content item the finding is scoped to.

        Returns:
            Diagnostic.
        """
        return Diagnostic(
            code=self.code,
            severity=self.default_severity,
            message=message,
            span=span,
            related=related,
            item=item,
        )


def sort_diagnostics(diagnostics: Iterable[Diagnostic]) -> list[Diagnostic]:
    """Sort diagnostics in output order.

    Args:
        diagnostics: Diagnostics.

    Returns:
        Sorted list.
    """
    return sorted(diagnostics, key=lambda diagnostic: diagnostic.sort_key)
