"""AMDiRE catalog: the artefact model the toolchain enforces.

The catalog is the single source of truth for artefact types, content items,
concept kinds and legal relations. It is embedded data, loaded once and
self-checked on load.
"""

from functools import cache, cached_property

from amdire.catalog import amdire as _data
from amdire.exceptions import CatalogIntegrityError, UnknownKindError
from amdire.types import FrozenModel
from amdire.types.catalog import (
    ArtefactTypeDef,
    AttributeDef,
    AttributeType,
    ConceptDef,
    ContentItemDef,
    DomainProfile,
    Level,
    MilestoneDef,
    MilestoneKind,
    RelationCheck,
    RelationKind,
    RelationRule,
    RoleDef,
)
from amdire.utils import kebab_case

#: Attribute accepted by every concept kind
DESCRIPTION = AttributeDef(name="description", type=AttributeType.TEXT)


class Catalog(FrozenModel):
    """Machine-readable artefact model."""

    artefact_types: tuple[ArtefactTypeDef, ...]
    content_items: tuple[ContentItemDef, ...]
    concepts: tuple[ConceptDef, ...]
    relation_rules: tuple[RelationRule, ...]
    roles: tuple[RoleDef, ...]
    milestones: tuple[MilestoneDef, ...]

    @cached_property
    def artefact_index(self) -> dict[str, ArtefactTypeDef]:
        """Artefact types by id, keyword and alias."""
        index: dict[str, ArtefactTypeDef] = {}
        for artefact in self.artefact_types:
            index[artefact.id] = index[artefact.keyword] = index[artefact.alias] = artefact
        return index

    @cached_property
    def item_index(self) -> dict[str, ContentItemDef]:
        """Content items by id."""
        return {item.id: item for item in self.content_items}

    @cached_property
    def concept_index(self) -> dict[str, ConceptDef]:
        """Concepts by kind and by keyword."""
        index: dict[str, ConceptDef] = {}
        for concept in self.concepts:
            index[concept.kind] = index[concept.keyword] = concept
        return index

    @cached_property
    def rule_index(self) -> dict[tuple[str, RelationKind], list[RelationRule]]:
        """Relation rules by (source kind, relation)."""
        index: dict[tuple[str, RelationKind], list[RelationRule]] = {}
        for rule in self.relation_rules:
            index.setdefault((rule.source_kind, rule.relation), []).append(rule)
        return index

    @cached_property
    def relation_keywords(self) -> dict[str, RelationKind]:
        """Relations by ARDL keyword."""
        return {relation.keyword: relation for relation in RelationKind}

    @cached_property
    def keywords(self) -> frozenset[str]:
        """Every reserved ARDL keyword."""
        return frozenset(
            {artefact.keyword for artefact in self.artefact_types}
            | {item.keyword for item in self.content_items}
            | {concept.keyword for concept in self.concepts}
            | set(self.relation_keywords)
        )

    def artefact_type(self, name: str) -> ArtefactTypeDef:
        """Return an artefact type.

        Args:
            name: Artefact type id, keyword or alias.

        Returns:
            Artefact type.

        Raises:
            UnknownKindError: Unknown artefact type.
        """
        try:
            return self.artefact_index[name]
        except KeyError:
            raise UnknownKindError(name, "artefact type") from None

    def content_item(self, item_id: str) -> ContentItemDef:
        """Return a content item.

        Args:
            item_id: Content item id.

        Returns:
            Content item.

        Raises:
            UnknownKindError: Unknown content item.
        """
        try:
            return self.item_index[item_id]
        except KeyError:
            raise UnknownKindError(item_id, "content item") from None

    def item_by_keyword(self, artefact_type: str, keyword: str) -> ContentItemDef | None:
        """Return the content item of an artefact type with this keyword.

        Args:
            artefact_type: Artefact type id.
            keyword: Item keyword.

        Returns:
            Content item, or None if the artefact type has no such item.
        """
        for item_id in self.artefact_type(artefact_type).content_items:
            item = self.item_index[item_id]
            if item.keyword == keyword:
                return item
        return None

    def is_item_keyword(self, keyword: str) -> bool:
        """Return True if some artefact type has an item with this keyword.

        Args:
            keyword: Keyword.

        Returns:
            True if it is an item keyword.
        """
        return any(item.keyword == keyword for item in self.content_items)

    def concept(self, kind: str) -> ConceptDef:
        """Return a concept definition.

        Args:
            kind: CamelCase kind or ARDL keyword.

        Returns:
            Concept definition.

        Raises:
            UnknownKindError: Unknown kind.
        """
        try:
            return self.concept_index[kind]
        except KeyError:
            raise UnknownKindError(kind) from None

    def has_kind(self, kind: str) -> bool:
        """Return True if the kind exists.

        Args:
            kind: CamelCase kind.

        Returns:
            True if known.
        """
        concept = self.concept_index.get(kind)
        return concept is not None and concept.kind == kind

    def attributes_of(self, kind: str) -> tuple[AttributeDef, ...]:
        """Return the attributes a kind accepts, including `description`.

        Args:
            kind: Concept kind.

        Returns:
            Attribute definitions.
        """
        return (*self.concept(kind).attributes, DESCRIPTION)

    def artefact_of_kind(self, kind: str) -> ArtefactTypeDef:
        """Return the artefact type housing a kind.

        Args:
            kind: Concept kind.

        Returns:
            Artefact type.
        """
        item = self.item_index[self.concept(kind).home_item]
        return self.artefact_index[item.artefact_type]

    def level_of(self, kind: str) -> Level:
        """Return the abstraction level of a kind.

        Args:
            kind: Concept kind.

        Returns:
            Level.
        """
        return self.artefact_of_kind(kind).level

    def rules_for(self, source_kind: str, relation: RelationKind) -> list[RelationRule]:
        """Return the relation rules of a source kind.

        Args:
            source_kind: Source concept kind.
            relation: Relation.

        Returns:
            Rules in catalog order.
        """
        return self.rule_index.get((source_kind, relation), [])

    def target_kinds(self, source_kind: str, relation: RelationKind) -> list[str]:
        """Return every legal target kind, sorted.

        Args:
            source_kind: Source concept kind.
            relation: Relation.

        Returns:
            Target kinds.
        """
        return sorted(
            {kind for rule in self.rules_for(source_kind, relation) for kind in rule.target_kinds}
        )

    def check_relation(
        self, source_kind: str, relation: RelationKind | str, target_kind: str
    ) -> RelationCheck:
        """Look up the rule governing a relation.

        Args:
            source_kind: Source concept kind.
            relation: Relation, as enum, CamelCase name or ARDL keyword.
            target_kind: Target concept kind.

        Returns:
            Whether allowed, and the governing multiplicity.

        Raises:
            UnknownKindError: Unknown kind or relation.
        """
        source = self.concept(source_kind).kind
        target = self.concept(target_kind).kind
        relation = self.relation(relation)
        for rule in self.rules_for(source, relation):
            if target in rule.target_kinds:
                return RelationCheck(allowed=True, multiplicity=rule.multiplicity)
        return RelationCheck(allowed=False)

    def relation(self, relation: RelationKind | str) -> RelationKind:
        """Normalize a relation name.

        Args:
            relation: Relation, as enum, CamelCase name or ARDL keyword.

        Returns:
            Relation.

        Raises:
            UnknownKindError: Unknown relation.
        """
        if isinstance(relation, RelationKind):
            return relation
        try:
            return RelationKind(relation)
        except ValueError:
            pass
        try:
            return self.relation_keywords[relation]
        except KeyError:
            raise UnknownKindError(relation, "relation") from None

    def content_items_for(
        self, artefact_type: str, domain_profile: DomainProfile | str
    ) -> list[ContentItemDef]:
        """Return the content items of an artefact type admitted by a profile.

        Args:
            artefact_type: Artefact type id, keyword or alias.
            domain_profile: Domain profile.

        Returns:
            Items in catalog order.
        """
        profile = DomainProfile(domain_profile)
        return [
            self.item_index[item_id]
            for item_id in self.artefact_type(artefact_type).content_items
            if profile.admits(self.item_index[item_id].domain_stereotype)
        ]

    def milestones_for(self, artefact_type: str) -> tuple[MilestoneDef, MilestoneDef]:
        """Return the milestones of an artefact type.

        Args:
            artefact_type: Artefact type id.

        Returns:
            (FirstItemDefined, Finalised) milestones.
        """
        first, final = self.artefact_type(artefact_type).milestones
        index = {milestone.id: milestone for milestone in self.milestones}
        return index[first], index[final]

    def role(self, role_id: str) -> RoleDef | None:
        """Return a role.

        Args:
            role_id: Role id.

        Returns:
            Role, or None if unknown.
        """
        for role in self.roles:
            if role.id == role_id:
                return role
        return None


def _attributes(spec: str) -> tuple[AttributeDef, ...]:
    """Parse a `name:type` attribute spec list.

    Args:
        spec: Space separated pairs.

    Returns:
        Attribute definitions.
    """
    attributes = []
    for pair in spec.split():
        name, type_ = pair.split(":")
        attributes.append(AttributeDef(name=name, type=AttributeType(type_)))
    return tuple(attributes)


def _build() -> Catalog:
    """Build the catalog from the embedded tables.

    Returns:
        Catalog.
    """
    concepts = tuple(
        ConceptDef(
            kind=kind,
            keyword=kebab_case(kind),
            home_item=home,
            attributes=_attributes(attributes),
            domain_stereotype=stereotype,
        )
        for kind, home, attributes, stereotype in _data.CONCEPTS
    )
    items = tuple(
        ContentItemDef(
            id=item_id,
            display_name=display,
            keyword=keyword,
            artefact_type=artefact,
            domain_stereotype=stereotype,
            concept_elements=tuple(
                concept.kind for concept in concepts if concept.home_item == item_id
            ),
        )
        for artefact, item_id, display, keyword, stereotype in _data.CONTENT_ITEMS
    )
    milestones = tuple(
        MilestoneDef(id=milestone_id, artefact_type=artefact, kind=kind, trigger_item=trigger)
        for milestone_id, artefact, kind, trigger in _data.MILESTONES
    )
    artefacts = tuple(
        ArtefactTypeDef(
            id=artefact_id,
            display_name=display,
            keyword=keyword,
            alias=alias,
            level=level,
            content_items=tuple(item.id for item in items if item.artefact_type == artefact_id),
            owning_role=role,
            milestones=tuple(  # type: ignore[arg-type]
                milestone.id for milestone in milestones if milestone.artefact_type == artefact_id
            ),
        )
        for artefact_id, display, keyword, alias, level, role in _data.ARTEFACT_TYPES
    )
    rules = tuple(
        RelationRule(
            relation=relation,
            source_kind=source,
            target_kinds=frozenset(targets.split()),
            multiplicity=multiplicity,
        )
        for relation, sources, targets, multiplicity in _data.RELATION_RULES
        for source in sources.split()
    )
    roles = tuple(
        RoleDef(id=role_id, display_name=display, responsible_for=artefact)
        for role_id, display, artefact in _data.ROLES
    )
    return Catalog(
        artefact_types=artefacts,
        content_items=items,
        concepts=concepts,
        relation_rules=rules,
        roles=roles,
        milestones=milestones,
    )


def _self_check(catalog: Catalog) -> list[str]:
    """Check the catalog's internal consistency.

    Args:
        catalog: Catalog to check.

    Returns:
        Problems found, empty if consistent.
    """
    problems: list[str] = []
    items = catalog.item_index
    role_ids = {role.id for role in catalog.roles}
    for artefact in catalog.artefact_types:
        if artefact.owning_role not in role_ids:
            problems.append(f"{artefact.id}: unknown owning role {artefact.owning_role}")
        first, final = catalog.milestones_for(artefact.id)
        if first.kind is not MilestoneKind.FIRST_ITEM_DEFINED or final.kind is not MilestoneKind.FINALISED:
            problems.append(f"{artefact.id}: milestones out of order")
        if not artefact.content_items or first.trigger_item != artefact.content_items[0]:
            problems.append(f"{artefact.id}: milestone trigger is not the first content item")
        keywords = [items[item_id].keyword for item_id in artefact.content_items]
        if len(set(keywords)) != len(keywords):
            problems.append(f"{artefact.id}: duplicate content item keyword")
    for concept in catalog.concepts:
        if concept.home_item not in items:
            problems.append(f"{concept.kind}: missing home item {concept.home_item}")
    kinds = [concept.kind for concept in catalog.concepts]
    if len(set(kinds)) != len(kinds):
        problems.append("duplicate concept kind")
    concept_keywords = {concept.keyword for concept in catalog.concepts}
    if len(concept_keywords) != len(kinds):
        problems.append("duplicate concept keyword")
    reserved = (
        {artefact.keyword for artefact in catalog.artefact_types}
        | {item.keyword for item in catalog.content_items}
        | set(catalog.relation_keywords)
    )
    problems.extend(
        f"keyword clash: {keyword}" for keyword in sorted(concept_keywords & reserved)
    )
    known = set(kinds)
    for rule in catalog.relation_rules:
        missing = sorted(({rule.source_kind} | rule.target_kinds) - known)
        if missing:
            problems.append(f"{rule.relation} rule of {rule.source_kind}: unknown kinds {', '.join(missing)}")
            continue
        if rule.relation is RelationKind.REALISES:
            source_depth = catalog.level_of(rule.source_kind).depth
            problems.extend(
                f"Realises {rule.source_kind} -> {target}: not the adjacent higher level"
                for target in sorted(rule.target_kinds)
                if catalog.level_of(target).depth != source_depth - 1
            )
    return problems


@cache
def load_catalog() -> Catalog:
    """Load the embedded AMDiRE catalog.

    Returns:
        The catalog, shared by every caller.

    Raises:
        CatalogIntegrityError: The embedded data is inconsistent.
    """
    catalog = _build()
    problems = _self_check(catalog)
    if problems:
        raise CatalogIntegrityError("; ".join(problems))
    return catalog


def check_relation_allowed(
    source_kind: str,
    relation: RelationKind | str,
    target_kind: str,
    catalog: Catalog | None = None,
) -> RelationCheck:
    """Check whether a relation between two kinds is legal.

    Args:
        source_kind: Source concept kind.
        relation: Relation.
        target_kind: Target concept kind.
        catalog: Catalog, the embedded one by default.

    Returns:
        Whether allowed, and the governing multiplicity.
    """
    return (catalog or load_catalog()).check_relation(source_kind, relation, target_kind)


def content_items_for(
    artefact_type: str,
    domain_profile: DomainProfile | str,
    catalog: Catalog | None = None,
) -> list[ContentItemDef]:
    """Return the content items of an artefact type admitted by a domain profile.

    Args:
        artefact_type: Artefact type id, keyword or alias.
        domain_profile: Domain profile.
        catalog: Catalog, the embedded one by default.

    Returns:
        Items in catalog order.
    """
    return (catalog or load_catalog()).content_items_for(artefact_type, domain_profile)
