"""Project manifest and invocation types."""

from pathlib import Path

from amdire.types import FrozenModel
from amdire.types.catalog import DomainProfile
from amdire.types.diagnostics import Diagnostic
from amdire.types.graph import Status
from amdire.types.syntax import Span
from amdire.types.tailoring import SeverityOverride


class ManifestAlias(FrozenModel):
    """Artefact file declared in the manifest."""

    alias: str
    path: str
    span: Span


class Manifest(FrozenModel):
    """Parsed project manifest."""

    path: str
    name: str = ""
    domain_profile: DomainProfile = DomainProfile.BOTH
    aliases: tuple[ManifestAlias, ...] = ()
    tailoring: tuple[str, ...] = ()
    severity_overrides: dict[str, SeverityOverride] = {}
    glossary_check: bool = False
    milestone_threshold: Status = Status.AGREED
    diagnostics: tuple[Diagnostic, ...] = ()


class Invocation(FrozenModel):
    """One CLI invocation."""

    subcommand: str
    project_path: Path
    flags: dict[str, str | bool | None] = {}
