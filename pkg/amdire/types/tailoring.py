"""Tailoring, project configuration and lifecycle types."""

from enum import StrEnum
from typing import Literal

from amdire.types import FrozenModel
from amdire.types.catalog import DomainProfile, MilestoneKind
from amdire.types.diagnostics import Diagnostic, Severity
from amdire.types.graph import Status
from amdire.types.syntax import Span

#: Severity override value
SeverityOverride = Severity | Literal["off"]


class ProfileLevel(StrEnum):
    """Tailoring level."""

    ORGANISATIONAL = "org"
    PROJECT = "project"


class SituationFactor(FrozenModel):
    """Project influence driving situation-aware tailoring."""

    name: str
    value: str
    span: Span | None = None


class TailoringProfile(FrozenModel):
    """Organisational or project tailoring decisions."""

    level: ProfileLevel
    domain_profile: DomainProfile | None = None
    disabled_items: frozenset[str] = frozenset()
    justifications: dict[str, str] = {}
    role_assignments: dict[str, str] = {}
    factors: tuple[SituationFactor, ...] = ()
    source: str | None = None
    spans: dict[str, Span] = {}


class EffectiveItems(FrozenModel):
    """Content items enabled per artefact type after tailoring."""

    domain_profile: DomainProfile
    items: dict[str, tuple[str, ...]]
    disabled: frozenset[str] = frozenset()
    justifications: dict[str, str] = {}
    roles: dict[str, str] = {}
    factors: tuple[SituationFactor, ...] = ()
    diagnostics: tuple[Diagnostic, ...] = ()


class TailoringDecision(FrozenModel):
    """Situation-driven decision on a content item."""

    factor: str
    value: str
    item: str
    effect: Literal["mandatory", "import-candidate"]
    note: str


class ProjectConfig(FrozenModel):
    """Effective project configuration consumed by linker and validator."""

    name: str = ""
    manifest: str = "amdire-project.txt"
    domain_profile: DomainProfile = DomainProfile.BOTH
    items: dict[str, tuple[str, ...]] = {}
    disabled: frozenset[str] = frozenset()
    justifications: dict[str, str] = {}
    roles: dict[str, str] = {}
    factors: tuple[SituationFactor, ...] = ()
    decisions: tuple[TailoringDecision, ...] = ()
    locked_items: frozenset[str] = frozenset()
    import_candidates: frozenset[str] = frozenset()
    severity_overrides: dict[str, SeverityOverride] = {}
    glossary_check: bool = False
    milestone_threshold: Status = Status.AGREED
    diagnostics: tuple[Diagnostic, ...] = ()

    def enabled(self, item_id: str) -> bool:
        """Return True if the content item is enabled.

        Args:
            item_id: Content item id.

        Returns:
            True if enabled.
        """
        return any(item_id in items for items in self.items.values())

    @property
    def rules_off(self) -> list[str]:
        """Codes switched off by severity overrides, sorted."""
        return sorted(
            code for code, value in self.severity_overrides.items() if value == "off"
        )


class Blocker(FrozenModel):
    """Reason a milestone is not reached."""

    item: str
    reason: str


class MilestoneStatus(FrozenModel):
    """Milestone evaluation."""

    milestone: str
    artefact_type: str
    kind: MilestoneKind
    reached: bool
    blocking: tuple[Blocker, ...] = ()


class ItemProgress(FrozenModel):
    """Completeness of one enabled content item."""

    item: str
    present: bool
    non_empty: bool
    error_free: bool

    @property
    def complete(self) -> bool:
        """True if present, non-empty and error-free."""
        return self.present and self.non_empty and self.error_free


class Completeness(FrozenModel):
    """Completeness of an artefact type."""

    artefact_type: str
    ratio: float
    items: tuple[ItemProgress, ...] = ()
