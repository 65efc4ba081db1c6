"""Catalog definition types (the artefact model's structure and content view)."""

from enum import StrEnum
from typing import Self

from amdire.types import FrozenModel
from amdire.utils import kebab_case


class Level(StrEnum):
    """Abstraction level of an artefact type."""

    CONTEXT = "Context"
    REQUIREMENTS = "Requirements"
    SYSTEM = "System"

    @property
    def depth(self) -> int:
        """Distance from the most abstract level (Context is 0)."""
        return _LEVEL_DEPTH[self]


_LEVEL_DEPTH = {Level.CONTEXT: 0, Level.REQUIREMENTS: 1, Level.SYSTEM: 2}


class DomainStereotype(StrEnum):
    """Domain restriction of a content item or concept."""

    BIS = "BusinessInformationSystems"
    EMBEDDED = "EmbeddedReactiveSystems"


class DomainProfile(StrEnum):
    """Application domain of a project."""

    BIS = "bis"
    EMBEDDED = "embedded"
    BOTH = "both"

    @classmethod
    def _missing_(cls, value: object) -> Self | None:
        """Accept long names ("BusinessInformationSystems") and any letter case."""
        if isinstance(value, str):
            key = value.strip().lower()
            for member in cls:
                if key in {member.value, _PROFILE_LONG_NAMES[member]}:
                    return member
        return None

    def admits(self, stereotype: DomainStereotype | None) -> bool:
        """Return True if content with this stereotype belongs to the profile.

        Args:
            stereotype: Domain stereotype, None for domain-neutral content.

        Returns:
            True if admitted.
        """
        return (
            stereotype is None
            or self is DomainProfile.BOTH
            or _PROFILE_STEREOTYPE[self] is stereotype
        )


_PROFILE_LONG_NAMES = {
    DomainProfile.BIS: "businessinformationsystems",
    DomainProfile.EMBEDDED: "embeddedreactivesystems",
    DomainProfile.BOTH: "both",
}
_PROFILE_STEREOTYPE = {
    DomainProfile.BIS: DomainStereotype.BIS,
    DomainProfile.EMBEDDED: DomainStereotype.EMBEDDED,
}


class RelationKind(StrEnum):
    """Relations between concept elements."""

    REALISES = "Realises"
    REFINES = "Refines"
    SATISFIES = "Satisfies"
    CONSTRAINS = "Constrains"
    ISSUED_BY = "IssuedBy"
    COMPOSES = "Composes"
    TRIGGERS = "Triggers"
    ASSESSED_BY = "AssessedBy"
    CAUSED_BY = "CausedBy"
    DEMANDS_QUALITY_ATTRIBUTE = "DemandsQualityAttribute"
    RELATED_TO = "RelatedTo"

    @property
    def keyword(self) -> str:
        """ARDL relation clause keyword."""
        if self is RelationKind.DEMANDS_QUALITY_ATTRIBUTE:
            return "demands"
        return kebab_case(self.value)


class Multiplicity(StrEnum):
    """Number of targets a relation may have per source element."""

    EXACTLY_ONE = "ExactlyOne"
    AT_MOST_ONE = "AtMostOne"
    AT_LEAST_ONE = "AtLeastOne"
    ANY = "Any"

    @property
    def lower(self) -> int:
        """Minimum number of targets."""
        return 1 if self in {Multiplicity.EXACTLY_ONE, Multiplicity.AT_LEAST_ONE} else 0

    @property
    def upper(self) -> int | None:
        """Maximum number of targets, None if unbounded."""
        return 1 if self in {Multiplicity.EXACTLY_ONE, Multiplicity.AT_MOST_ONE} else None


class MilestoneKind(StrEnum):
    """Milestone kinds, each artefact type has one of each."""

    FIRST_ITEM_DEFINED = "FirstItemDefined"
    FINALISED = "Finalised"


class AttributeType(StrEnum):
    """Scalar types of concept attributes."""

    TEXT = "text"
    NUMBER = "number"
    BOOLEAN = "boolean"
    LIST = "list"
    REFERENCE = "reference"


class AttributeDef(FrozenModel):
    """Attribute declared by a concept kind."""

    name: str
    type: AttributeType


class RoleDef(FrozenModel):
    """Role responsible for one artefact type."""

    id: str
    display_name: str
    responsible_for: str


class MilestoneDef(FrozenModel):
    """Maturity gate of an artefact type."""

    id: str
    artefact_type: str
    kind: MilestoneKind
    trigger_item: str | None = None


class ArtefactTypeDef(FrozenModel):
    """One of the three specifications."""

    id: str
    display_name: str
    keyword: str
    alias: str
    level: Level
    content_items: tuple[str, ...]
    owning_role: str
    milestones: tuple[str, str]


class ContentItemDef(FrozenModel):
    """Named section of an artefact type."""

    id: str
    display_name: str
    keyword: str
    artefact_type: str
    domain_stereotype: DomainStereotype | None = None
    mandatory: bool = True
    concept_elements: tuple[str, ...] = ()


class ConceptDef(FrozenModel):
    """Kind of concept element, homed in exactly one content item."""

    kind: str
    keyword: str
    home_item: str
    attributes: tuple[AttributeDef, ...] = ()
    domain_stereotype: DomainStereotype | None = None

    def attribute(self, name: str) -> AttributeDef | None:
        """Return the declared attribute with this name.

        Args:
            name: Attribute name.

        Returns:
            Attribute definition, or None if not declared.
        """
        for attribute in self.attributes:
            if attribute.name == name:
                return attribute
        return None


class RelationRule(FrozenModel):
    """Legal relation from a source kind to a set of target kinds."""

    relation: RelationKind
    source_kind: str
    target_kinds: frozenset[str]
    multiplicity: Multiplicity = Multiplicity.ANY


class RelationCheck(FrozenModel):
    """Result of a relation rule lookup."""

    allowed: bool
    multiplicity: Multiplicity | None = None
