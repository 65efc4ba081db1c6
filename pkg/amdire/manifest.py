"""Project manifest and tailoring file readers.

Both formats are line oriented: one `key: value` record per line, blank
lines and lines starting with `#` are ignored. Problems are reported as
diagnostics located on the offending line.
"""

from re import compile as compile_regex

from amdire.catalog import Catalog, load_catalog
from amdire.codes import (
    ALL_RULES,
    INVALID_MANIFEST_VALUE,
    INVALID_TAILORING,
    UNKNOWN_MANIFEST_LINE,
)
from amdire.types.catalog import DomainProfile
from amdire.types.diagnostics import Diagnostic, Severity
from amdire.types.graph import Status
from amdire.types.project import Manifest, ManifestAlias
from amdire.types.syntax import Span
from amdire.types.tailoring import (
    ProfileLevel,
    SeverityOverride,
    SituationFactor,
    TailoringProfile,
)

_RECORD = compile_regex(r"^(?P<key>[a-z][a-z-]*)\s*:\s*(?P<value>.*?)\s*$")
_ALIAS = compile_regex(r"^alias\s+(?P<alias>[A-Za-z_][A-Za-z0-9_-]*)\s*:\s*(?P<value>.*?)\s*$")
_RULE = compile_regex(r"^rule\s+(?P<code>\S+?)\s*:\s*(?P<value>.*?)\s*$")
_DISABLE = compile_regex(r"^disable\s+(?P<item>\w+)\s*(?::\s*(?P<value>.*?))?\s*$")
_ASSIGN = compile_regex(r"^assign\s+(?P<role>\w+)\s*:\s*(?P<value>.*?)\s*$")
_FACTOR = compile_regex(r"^factor\s+(?P<name>\w+)\s*:\s*(?P<value>.*?)\s*$")
_SWITCH = {"on": True, "off": False}
_LEVELS = {"org": ProfileLevel.ORGANISATIONAL, "project": ProfileLevel.PROJECT}


def _unquote(value: str) -> str:
    """Strip surrounding double quotes.

    Args:
        value: Raw value.

    Returns:
        Value without quotes.
    """
    if len(value) >= 2 and value[0] == value[-1] == '"':
        return value[1:-1].replace('\\"', '"').replace("\\\\", "\\")
    return value


def _lines(path: str, content: str) -> list[tuple[str, Span]]:
    """Split content in significant lines.

    Args:
        path: File path for spans.
        content: File content.

    Returns:
        Stripped lines with their spans.
    """
    lines = []
    for number, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        start = len(raw) - len(raw.lstrip()) + 1
        lines.append(
            (
                line,
                Span(
                    file=path,
                    start_line=number,
                    start_col=start,
                    end_line=number,
                    end_col=start + len(line),
                ),
            )
        )
    return lines


def _domain_profile(value: str) -> DomainProfile | None:
    try:
        return DomainProfile(value)
    except ValueError:
        return None


def parse_manifest(path: str, content: str) -> Manifest:
    """Parse a project manifest.

    Args:
        path: Manifest path, used in diagnostics.
        content: Manifest content.

    Returns:
        Manifest, with its diagnostics.
    """
    name = ""
    profile = DomainProfile.BOTH
    aliases: list[ManifestAlias] = []
    tailoring: list[str] = []
    overrides: dict[str, SeverityOverride] = {}
    glossary_check = False
    threshold = Status.AGREED
    diagnostics: list[Diagnostic] = []

    def invalid(message: str, span: Span) -> None:
        diagnostics.append(INVALID_MANIFEST_VALUE.diagnostic(message, span))

    for line, span in _lines(path, content):
        if match := _ALIAS.match(line):
            alias, value = match["alias"], _unquote(match["value"])
            if any(known.alias == alias for known in aliases):
                invalid(f"Duplicate alias '{alias}'", span)
            elif not value.endswith(".ardl"):
                invalid(f"Alias '{alias}' must name an .ardl file, got '{value}'", span)
            else:
                aliases.append(ManifestAlias(alias=alias, path=value, span=span))
            continue
        if match := _RULE.match(line):
            code, value = match["code"], match["value"].lower()
            if code not in ALL_RULES:
                invalid(f"Unknown rule code '{code}'", span)
            elif value == "off":
                overrides[code] = "off"
            elif value in set(Severity):
                overrides[code] = Severity(value)
            else:
                invalid(
                    f"Invalid severity '{match['value']}' for {code}, expected error, warning, info or off",
                    span,
                )
            continue
        match = _RECORD.match(line)
        key = match["key"] if match else None
        value = _unquote(match["value"]) if match else ""
        if key == "name":
            name = value
        elif key == "domain-profile":
            parsed = _domain_profile(value)
            if parsed is None:
                invalid(f"Invalid domain profile '{value}', expected bis, embedded or both", span)
            else:
                profile = parsed
        elif key == "tailoring":
            tailoring.append(value)
        elif key == "glossary-check":
            if value.lower() in _SWITCH:
                glossary_check = _SWITCH[value.lower()]
            else:
                invalid(f"Invalid glossary-check '{value}', expected on or off", span)
        elif key == "milestone-threshold":
            if value in {Status.DEFINED, Status.AGREED}:
                threshold = Status(value)
            else:
                invalid(
                    f"Invalid milestone-threshold '{value}', expected defined or agreed", span
                )
        else:
            diagnostics.append(
                UNKNOWN_MANIFEST_LINE.diagnostic(f"Unknown manifest line '{line}'", span)
            )
    return Manifest(
        path=path,
        name=name,
        domain_profile=profile,
        aliases=tuple(aliases),
        tailoring=tuple(tailoring),
        severity_overrides=overrides,
        glossary_check=glossary_check,
        milestone_threshold=threshold,
        diagnostics=tuple(diagnostics),
    )


def parse_tailoring(
    path: str, content: str, catalog: Catalog | None = None
) -> tuple[TailoringProfile, list[Diagnostic]]:
    """Parse a tailoring file.

    Args:
        path: Tailoring file path, used in diagnostics.
        content: File content.
        catalog: Catalog, the embedded one by default.

    Returns:
        Tailoring profile and diagnostics.
    """
    catalog = catalog or load_catalog()
    level = ProfileLevel.PROJECT
    profile: DomainProfile | None = None
    disabled: set[str] = set()
    justifications: dict[str, str] = {}
    roles: dict[str, str] = {}
    factors: list[SituationFactor] = []
    spans: dict[str, Span] = {}
    diagnostics: list[Diagnostic] = []

    def invalid(message: str, span: Span) -> None:
        diagnostics.append(INVALID_TAILORING.diagnostic(message, span))

    for line, span in _lines(path, content):
        if match := _DISABLE.match(line):
            item = match["item"]
            if item not in catalog.item_index:
                invalid(f"Unknown content item '{item}'", span)
                continue
            disabled.add(item)
            spans[item] = span
            justification = _unquote(match["value"] or "").strip()
            if justification:
                justifications[item] = justification
            continue
        if match := _ASSIGN.match(line):
            role = match["role"]
            if catalog.role(role) is None:
                invalid(
                    f"Unknown role '{role}', expected {', '.join(r.id for r in catalog.roles)}",
                    span,
                )
            else:
                roles[role] = _unquote(match["value"])
            continue
        if match := _FACTOR.match(line):
            factors.append(
                SituationFactor(
                    name=match["name"], value=_unquote(match["value"]).lower(), span=span
                )
            )
            continue
        match = _RECORD.match(line)
        key = match["key"] if match else None
        value = _unquote(match["value"]) if match else ""
        if key == "level" and value in _LEVELS:
            level = _LEVELS[value]
        elif key == "domain-profile" and _domain_profile(value) is not None:
            profile = _domain_profile(value)
        elif key in {"level", "domain-profile"}:
            invalid(f"Invalid {key} '{value}'", span)
        else:
            invalid(f"Unknown tailoring directive '{line}'", span)
    return (
        TailoringProfile(
            level=level,
            domain_profile=profile,
            disabled_items=frozenset(disabled),
            justifications=justifications,
            role_assignments=roles,
            factors=tuple(factors),
            source=path,
            spans=spans,
        ),
        diagnostics,
    )
