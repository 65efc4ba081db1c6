"""Tests for the embedded catalog."""

from typing import TYPE_CHECKING

import pytest

from amdire.catalog import (
    _self_check,
    check_relation_allowed,
    content_items_for,
    load_catalog,
)
from amdire.exceptions import UnknownKindError
from amdire.types.catalog import (
    DomainProfile,
    DomainStereotype,
    Level,
    MilestoneKind,
    Multiplicity,
    RelationKind,
)

if TYPE_CHECKING:
    from amdire.catalog import Catalog


class TestStructure:
    """Artefact types, content items, roles and milestones."""

    def test_artefact_types(self, catalog: "Catalog") -> None:
        """Three artefact types, one per abstraction level."""
        assert [artefact.id for artefact in catalog.artefact_types] == [
            "ContextSpecification",
            "RequirementsSpecification",
            "SystemSpecification",
        ]
        assert [artefact.level for artefact in catalog.artefact_types] == [
            Level.CONTEXT,
            Level.REQUIREMENTS,
            Level.SYSTEM,
        ]

    @pytest.mark.parametrize(
        ("artefact_type", "count"),
        [("context", 7), ("requirements", 10), ("system", 5)],
    )
    def test_content_item_counts(
        self, catalog: "Catalog", artefact_type: str, count: int
    ) -> None:
        """Content item counts per artefact type."""
        assert len(catalog.content_items_for(artefact_type, DomainProfile.BOTH)) == count

    def test_concepts(self, catalog: "Catalog") -> None:
        """Every concept is homed in a known content item."""
        assert len(catalog.concepts) >= 70
        for concept in catalog.concepts:
            assert concept.home_item in catalog.item_index

    def test_roles(self, catalog: "Catalog") -> None:
        """One owning role per artefact type."""
        assert len(catalog.roles) == 3
        owners = {role.responsible_for for role in catalog.roles}
        assert owners == {artefact.id for artefact in catalog.artefact_types}

    def test_milestones(self, catalog: "Catalog") -> None:
        """Two milestones per artefact type, the first triggered by the first item."""
        assert len(catalog.milestones) == 6
        first, final = catalog.milestones_for("RequirementsSpecification")
        assert (first.id, final.id) == ("RS-M1", "RS-M2")
        assert first.kind is MilestoneKind.FIRST_ITEM_DEFINED
        assert first.trigger_item == "SystemVision"
        assert final.kind is MilestoneKind.FINALISED
        assert final.trigger_item is None

    def test_self_check(self, catalog: "Catalog") -> None:
        """The embedded tables are consistent."""
        assert _self_check(catalog) == []

    def test_cached(self) -> None:
        """The catalog is built once."""
        assert load_catalog() is load_catalog()


class TestLookup:
    """Name based lookups."""

    def test_artefact_type_names(self, catalog: "Catalog") -> None:
        """Artefact types resolve by id, keyword and alias."""
        for name in ("SystemSpecification", "system-specification", "system"):
            assert catalog.artefact_type(name).id == "SystemSpecification"

    def test_unknown_artefact_type(self, catalog: "Catalog") -> None:
        """Unknown artefact type names raise."""
        with pytest.raises(UnknownKindError):
            catalog.artefact_type("design")

    def test_concept_by_keyword(self, catalog: "Catalog") -> None:
        """Concepts resolve by kind and by kebab-case keyword."""
        assert catalog.concept("user-visible-function").kind == "UserVisibleFunction"
        assert catalog.concept("SystemFunction").keyword == "system-function"

    def test_unknown_concept(self, catalog: "Catalog") -> None:
        """Unknown kinds raise."""
        with pytest.raises(UnknownKindError):
            catalog.concept("Widget")

    def test_relation_names(self, catalog: "Catalog") -> None:
        """Relations resolve by name and keyword."""
        assert catalog.relation("realises") is RelationKind.REALISES
        assert catalog.relation("Realises") is RelationKind.REALISES
        assert catalog.relation("demands") is RelationKind.DEMANDS_QUALITY_ATTRIBUTE
        assert catalog.relation("related-to") is RelationKind.RELATED_TO
        with pytest.raises(UnknownKindError):
            catalog.relation("implements")

    def test_attributes(self, catalog: "Catalog") -> None:
        """Every kind accepts a description."""
        names = [attribute.name for attribute in catalog.attributes_of("Term")]
        assert names == ["abbreviation", "synonyms", "description"]

    def test_levels(self, catalog: "Catalog") -> None:
        """Kinds inherit the level of their artefact type."""
        assert catalog.level_of("BusinessObject") is Level.CONTEXT
        assert catalog.level_of("DataObject") is Level.REQUIREMENTS
        assert catalog.level_of("SystemFunction") is Level.SYSTEM

    def test_shared_item_keyword(self, catalog: "Catalog") -> None:
        """Item keywords are unique per artefact type, not globally."""
        assert catalog.item_by_keyword("requirements", "data-model").id == "DataModel"
        assert catalog.item_by_keyword("system", "data-model").id == "SystemDataModel"
        assert catalog.item_by_keyword("context", "data-model") is None


class TestRelationRules:
    """Relation legality and multiplicities."""

    @pytest.mark.parametrize(
        ("source", "target"),
        [
            ("Actor", "UserGroup"),
            ("Actor", "ExternalSystem"),
            ("DataObject", "BusinessObject"),
            ("SystemAction", "ProcessStep"),
            ("SystemFunction", "SystemAction"),
            ("SystemFunction", "UserVisibleFunction"),
            ("SystemInterface", "Interface"),
            ("DataElement", "DataObject"),
            ("State", "Mode"),
        ],
    )
    def test_realisation_families(self, source: str, target: str) -> None:
        """Realisation links adjacent levels."""
        assert check_relation_allowed(source, RelationKind.REALISES, target).allowed

    def test_realisation_skips_level(self) -> None:
        """Realisation across two levels is illegal."""
        check = check_relation_allowed("SystemFunction", "realises", "ProcessStep")
        assert not check.allowed
        assert check.multiplicity is None

    def test_multiplicity(self, catalog: "Catalog") -> None:
        """The governing multiplicity is returned."""
        assert catalog.check_relation("Actor", "realises", "UserGroup").multiplicity is (
            Multiplicity.EXACTLY_ONE
        )
        assert catalog.check_relation(
            "SystemFunction", "realises", "UserVisibleFunction"
        ).multiplicity is Multiplicity.AT_LEAST_ONE

    def test_keywords_accepted(self, catalog: "Catalog") -> None:
        """Kinds may be given as keywords."""
        assert catalog.check_relation("actor", "realises", "user-group").allowed

    def test_target_kinds(self, catalog: "Catalog") -> None:
        """Target kinds are merged and sorted."""
        assert catalog.target_kinds("Actor", RelationKind.REALISES) == [
            "ExternalSystem",
            "UserGroup",
        ]
        assert catalog.target_kinds("Term", RelationKind.REALISES) == []

    def test_multiplicity_bounds(self) -> None:
        """Multiplicity bounds."""
        assert (Multiplicity.EXACTLY_ONE.lower, Multiplicity.EXACTLY_ONE.upper) == (1, 1)
        assert (Multiplicity.AT_LEAST_ONE.lower, Multiplicity.AT_LEAST_ONE.upper) == (1, None)
        assert (Multiplicity.ANY.lower, Multiplicity.ANY.upper) == (0, None)


class TestDomainProfiles:
    """Domain stereotype filtering."""

    def test_embedded_has_no_service_model(self) -> None:
        """Embedded projects have no service model."""
        items = [item.id for item in content_items_for("requirements", "embedded")]
        assert "ServiceModel" not in items
        assert len(items) == 9

    def test_bis_keeps_all_items(self) -> None:
        """No content item is embedded-only."""
        assert len(content_items_for("requirements", DomainProfile.BIS)) == 10

    def test_long_names(self) -> None:
        """Profiles accept long names in any case."""
        assert DomainProfile("EmbeddedReactiveSystems") is DomainProfile.EMBEDDED
        assert DomainProfile("BIS") is DomainProfile.BIS

    def test_admits(self) -> None:
        """Neutral content is admitted by every profile."""
        assert DomainProfile.BIS.admits(None)
        assert not DomainProfile.BIS.admits(DomainStereotype.EMBEDDED)
        assert DomainProfile.BOTH.admits(DomainStereotype.EMBEDDED)
