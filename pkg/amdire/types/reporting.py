"""Report types."""

from typing import Literal

from pydantic import computed_field

from amdire.types import FrozenModel

#: Document formats
DocumentFormat = Literal["markdown", "ardl"]


class TraceRow(FrozenModel):
    """Source element with its realisation targets."""

    source: str
    targets: tuple[str, ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def covered(self) -> bool:
        """True if at least one target exists."""
        return bool(self.targets)


class TraceMatrix(FrozenModel):
    """Traceability matrix between two concept kinds."""

    from_kind: str
    to_kind: str
    via: str | None = None
    rows: tuple[TraceRow, ...] = ()

    @property
    def covered_count(self) -> int:
        """Number of covered rows."""
        return sum(row.covered for row in self.rows)

    @property
    def coverage(self) -> float:
        """Covered row ratio, 1.0 for an empty matrix."""
        return self.covered_count / len(self.rows) if self.rows else 1.0


class RenderedDocument(FrozenModel):
    """Rendered specification document."""

    artefact_type: str
    format: DocumentFormat
    body: str
