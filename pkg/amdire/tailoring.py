"""Static and situation-aware tailoring of the content item set.

Tailoring runs in two steps. `effective_items` merges the organisational and
project profiles into the enabled item lists of each artefact type, then
`static_tailor` applies the situation factor table, forcing or flagging items
depending on project influences. Dynamic tailoring is a re-run of both steps
on updated tailoring files.
"""

from collections.abc import Iterable, Sequence
from typing import Literal, NamedTuple

from amdire.catalog import Catalog, load_catalog
from amdire.codes import (
    CONFLICTING_PROFILES,
    FORCED_ITEM_DISABLED,
    INVALID_TAILORING,
    TRIGGER_ITEM_DISABLED,
    UNJUSTIFIED_DISABLE,
    UNKNOWN_FACTOR,
)
from amdire.types.catalog import DomainProfile
from amdire.types.diagnostics import Diagnostic, RelatedNote, sort_diagnostics
from amdire.types.syntax import Span
from amdire.types.tailoring import (
    EffectiveItems,
    ProfileLevel,
    ProjectConfig,
    SituationFactor,
    TailoringDecision,
    TailoringProfile,
)


class SituationRule(NamedTuple):
    """Effect of a situation factor value on a content item."""

    item: str
    effect: Literal["mandatory", "import-candidate"]
    note: str


#: Known situation factors and their values
SITUATION_FACTORS: dict[str, tuple[str, ...]] = {
    "safety_critical": ("yes", "no"),
    "custom_development": ("yes", "no"),
    "predecessor_system_exists": ("yes", "no"),
}

#: Situation factor table: (factor, value) -> item rules
SITUATION_TABLE: dict[tuple[str, str], tuple[SituationRule, ...]] = {
    ("safety_critical", "yes"): (
        SituationRule("RiskList", "mandatory", "safety hazards must be analysed"),
        SituationRule(
            "QualityRequirements", "mandatory", "safety properties must be assessable"
        ),
    ),
    ("custom_development", "no"): (
        SituationRule(
            "ProcessRequirements",
            "mandatory",
            "procurement constraints bind the development process",
        ),
    ),
    ("predecessor_system_exists", "yes"): (
        SituationRule(
            "DomainModel",
            "import-candidate",
            "domain model can be imported from the predecessor system",
        ),
    ),
}


def _span(profile: TailoringProfile, item: str | None = None) -> Span:
    """Return the location of a tailoring decision.

    Args:
        profile: Profile holding the decision.
        item: Content item, if the decision is item specific.

    Returns:
        Line of the decision, or the start of the tailoring file.
    """
    if item is not None and item in profile.spans:
        return profile.spans[item]
    return Span(
        file=profile.source or "tailoring.txt",
        start_line=1,
        start_col=1,
        end_line=1,
        end_col=1,
    )


def _by_level(
    profiles: Iterable[TailoringProfile], diagnostics: list[Diagnostic]
) -> dict[ProfileLevel, TailoringProfile]:
    """Index profiles by level, keeping the first of each.

    Args:
        profiles: Profiles.
        diagnostics: Diagnostics list to extend.

    Returns:
        Profiles by level.
    """
    levels: dict[ProfileLevel, TailoringProfile] = {}
    for profile in profiles:
        if profile.level in levels:
            diagnostics.append(
                INVALID_TAILORING.diagnostic(
                    f"More than one {profile.level} level tailoring profile, "
                    f"'{profile.source}' is ignored",
                    _span(profile),
                )
            )
            continue
        levels[profile.level] = profile
    return levels


def effective_items(
    catalog: Catalog | None,
    profiles: Sequence[TailoringProfile],
    *,
    domain_profile: DomainProfile = DomainProfile.BOTH,
) -> EffectiveItems:
    """Merge tailoring profiles into the enabled content items.

    The project profile overrides the organisational one. Disabling a
    milestone trigger item, or a core item without justification, is reported
    and the item stays enabled.

    Args:
        catalog: Catalog, the embedded one by default.
        profiles: At most one organisational and one project profile.
        domain_profile: Domain profile used when no profile sets one.

    Returns:
        Enabled items per artefact type, with tailoring diagnostics.
    """
    catalog = catalog or load_catalog()
    diagnostics: list[Diagnostic] = []
    levels = _by_level(profiles, diagnostics)
    organisational = levels.get(ProfileLevel.ORGANISATIONAL)
    project = levels.get(ProfileLevel.PROJECT)
    ordered = [profile for profile in (organisational, project) if profile is not None]

    if (
        organisational is not None
        and project is not None
        and organisational.domain_profile not in {None, DomainProfile.BOTH}
        and project.domain_profile is not None
        and project.domain_profile != organisational.domain_profile
    ):
        diagnostics.append(
            CONFLICTING_PROFILES.diagnostic(
                f"Project domain profile '{project.domain_profile}' conflicts with "
                f"the organisational profile '{organisational.domain_profile}'",
                _span(project),
                related=(
                    RelatedNote(
                        span=_span(organisational), note="organisational profile"
                    ),
                ),
            )
        )
    profile = next(
        (
            level.domain_profile
            for level in reversed(ordered)
            if level.domain_profile is not None
        ),
        domain_profile,
    )

    justifications: dict[str, str] = {}
    roles: dict[str, str] = {}
    factors: dict[str, SituationFactor] = {}
    requested: dict[str, TailoringProfile] = {}
    for level in ordered:
        justifications.update(level.justifications)
        roles.update(level.role_assignments)
        factors.update((factor.name, factor) for factor in level.factors)
        requested.update((item, level) for item in sorted(level.disabled_items))

    triggers = {
        milestone.trigger_item: milestone
        for milestone in catalog.milestones
        if milestone.trigger_item is not None
    }
    disabled: set[str] = set()
    for item_id, source in sorted(requested.items()):
        item = catalog.content_item(item_id)
        if item_id in triggers:
            diagnostics.append(
                TRIGGER_ITEM_DISABLED.diagnostic(
                    f"{item.display_name} triggers milestone {triggers[item_id].id} "
                    "and cannot be disabled",
                    _span(source, item_id),
                )
            )
        elif item.domain_stereotype is None and not justifications.get(item_id):
            diagnostics.append(
                UNJUSTIFIED_DISABLE.diagnostic(
                    f"Core content item {item.display_name} is disabled without "
                    "justification",
                    _span(source, item_id),
                )
            )
        else:
            disabled.add(item_id)

    return EffectiveItems(
        domain_profile=profile,
        items=_enabled(catalog, profile, disabled),
        disabled=frozenset(disabled),
        justifications={k: v for k, v in justifications.items() if k in disabled},
        roles=roles,
        factors=tuple(factors[name] for name in sorted(factors)),
        diagnostics=tuple(sort_diagnostics(diagnostics)),
    )


def _enabled(
    catalog: Catalog, profile: DomainProfile, disabled: Iterable[str]
) -> dict[str, tuple[str, ...]]:
    """Return enabled item ids per artefact type, in catalog order.

    Args:
        catalog: Catalog.
        profile: Domain profile.
        disabled: Disabled items.

    Returns:
        Item ids by artefact type id.
    """
    excluded = set(disabled)
    return {
        artefact.id: tuple(
            item.id
            for item in catalog.content_items_for(artefact.id, profile)
            if item.id not in excluded
        )
        for artefact in catalog.artefact_types
    }


def static_tailor(
    effective: EffectiveItems,
    situation: Sequence[SituationFactor] | None = None,
    *,
    catalog: Catalog | None = None,
) -> ProjectConfig:
    """Apply the situation factor table to the effective items.

    Args:
        effective: Effective items.
        situation: Situation factors, those of the tailoring profiles by default.
        catalog: Catalog, the embedded one by default.

    Returns:
        Project configuration recording every decision with its factor.
    """
    catalog = catalog or load_catalog()
    factors = effective.factors if situation is None else tuple(situation)
    diagnostics = list(effective.diagnostics)
    disabled = set(effective.disabled)
    decisions: list[TailoringDecision] = []
    locked: set[str] = set()
    candidates: set[str] = set()

    for factor in factors:
        span = factor.span or Span(
            file="tailoring.txt", start_line=1, start_col=1, end_line=1, end_col=1
        )
        values = SITUATION_FACTORS.get(factor.name)
        if values is None:
            diagnostics.append(
                UNKNOWN_FACTOR.diagnostic(
                    f"Unknown situation factor '{factor.name}', expected one of: "
                    f"{', '.join(sorted(SITUATION_FACTORS))}",
                    span,
                )
            )
            continue
        if factor.value not in values:
            diagnostics.append(
                UNKNOWN_FACTOR.diagnostic(
                    f"Invalid value '{factor.value}' for situation factor "
                    f"'{factor.name}', expected {' or '.join(values)}",
                    span,
                )
            )
            continue
        for rule in SITUATION_TABLE.get((factor.name, factor.value), ()):
            decisions.append(
                TailoringDecision(
                    factor=factor.name,
                    value=factor.value,
                    item=rule.item,
                    effect=rule.effect,
                    note=rule.note,
                )
            )
            if rule.effect == "import-candidate":
                candidates.add(rule.item)
                continue
            locked.add(rule.item)
            if rule.item in disabled:
                disabled.discard(rule.item)
                diagnostics.append(
                    FORCED_ITEM_DISABLED.diagnostic(
                        f"{catalog.content_item(rule.item).display_name} is disabled but "
                        f"'{factor.name}: {factor.value}' makes it mandatory",
                        span,
                    )
                )

    return ProjectConfig(
        domain_profile=effective.domain_profile,
        items=_enabled(catalog, effective.domain_profile, disabled),
        disabled=frozenset(disabled),
        justifications={
            k: v for k, v in effective.justifications.items() if k in disabled
        },
        roles=effective.roles,
        factors=factors,
        decisions=tuple(decisions),
        locked_items=frozenset(locked),
        import_candidates=frozenset(candidates),
        diagnostics=tuple(sort_diagnostics(diagnostics)),
    )


def default_config(
    catalog: Catalog | None = None,
    domain_profile: DomainProfile = DomainProfile.BOTH,
    name: str = "",
) -> ProjectConfig:
    """Return the configuration of an untailored project.

    Args:
        catalog: Catalog, the embedded one by default.
        domain_profile: Domain profile.
        name: Project name.

    Returns:
        Every item admitted by the profile enabled.
    """
    catalog = catalog or load_catalog()
    effective = effective_items(catalog, (), domain_profile=domain_profile)
    return static_tailor(effective, (), catalog=catalog).model_copy(
        update={"name": name}
    )
