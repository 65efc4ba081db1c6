"""Linked model graph types."""

from collections import defaultdict
from enum import StrEnum
from functools import cached_property
from typing import Self

from amdire.types import FrozenModel
from amdire.types.catalog import RelationKind
from amdire.types.syntax import Span


class Status(StrEnum):
    """Element maturity ladder."""

    DRAFT = "draft"
    DEFINED = "defined"
    AGREED = "agreed"

    @property
    def rank(self) -> int:
        """Position on the ladder (draft is 0)."""
        return _STATUS_RANK[self]


_STATUS_RANK = {Status.DRAFT: 0, Status.DEFINED: 1, Status.AGREED: 2}


class Reference(FrozenModel):
    """Reference-typed attribute value."""

    path: str
    target: str | None = None


type GraphScalar = str | bool | int | float | Reference
type GraphValue = GraphScalar | tuple[GraphScalar, ...]


class ModelElement(FrozenModel):
    """Concept element instance."""

    id: str
    kind: str
    name: str
    qualified_name: str
    title: str | None = None
    attributes: dict[str, GraphValue] = {}
    status: Status = Status.DRAFT
    home_item: str
    artefact_type: str
    span: Span


class ModelEdge(FrozenModel):
    """Typed relation between two elements."""

    source: str
    relation: RelationKind
    target: str
    span: Span


class ArtefactInfo(FrozenModel):
    """Artefact file declared in the project."""

    artefact_type: str
    file: str
    alias: str
    title: str | None = None
    span: Span
    item_spans: dict[str, Span] = {}


class ModelGraph(FrozenModel):
    """Resolved instance of a project's three specifications."""

    project: str = ""
    elements: dict[str, ModelElement] = {}
    edges: tuple[ModelEdge, ...] = ()
    partitions: dict[str, frozenset[str]] = {}
    parents: dict[str, str] = {}
    children: dict[str, tuple[str, ...]] = {}
    artefacts: dict[str, ArtefactInfo] = {}

    @cached_property
    def outgoing_index(self) -> dict[str, list[ModelEdge]]:
        """Edges by source element id."""
        index: dict[str, list[ModelEdge]] = defaultdict(list)
        for edge in self.edges:
            index[edge.source].append(edge)
        return index

    @cached_property
    def incoming_index(self) -> dict[str, list[ModelEdge]]:
        """Edges by target element id."""
        index: dict[str, list[ModelEdge]] = defaultdict(list)
        for edge in self.edges:
            index[edge.target].append(edge)
        return index

    @cached_property
    def kind_index(self) -> dict[str, list[str]]:
        """Element ids by concept kind."""
        index: dict[str, list[str]] = defaultdict(list)
        for element_id in sorted(self.elements):
            index[self.elements[element_id].kind].append(element_id)
        return index

    @cached_property
    def item_index(self) -> dict[str, list[str]]:
        """Element ids by home content item."""
        index: dict[str, list[str]] = defaultdict(list)
        for element_id in sorted(self.elements):
            index[self.elements[element_id].home_item].append(element_id)
        return index

    def outgoing(
        self, element_id: str, relation: RelationKind | None = None
    ) -> list[ModelEdge]:
        """Return edges leaving an element.

        Args:
            element_id: Source element.
            relation: Optional relation filter.

        Returns:
            Edges in declaration order.
        """
        edges = self.outgoing_index.get(element_id, [])
        if relation is None:
            return list(edges)
        return [edge for edge in edges if edge.relation is relation]

    def incoming(
        self, element_id: str, relation: RelationKind | None = None
    ) -> list[ModelEdge]:
        """Return edges entering an element.

        Args:
            element_id: Target element.
            relation: Optional relation filter.

        Returns:
            Edges in declaration order.
        """
        edges = self.incoming_index.get(element_id, [])
        if relation is None:
            return list(edges)
        return [edge for edge in edges if edge.relation is relation]

    def of_kind(self, *kinds: str) -> list[ModelElement]:
        """Return elements of the given kinds, ordered by id.

        Args:
            *kinds: Concept kinds.

        Returns:
            Elements.
        """
        ids = sorted(
            element_id for kind in kinds for element_id in self.kind_index.get(kind, ())
        )
        return [self.elements[element_id] for element_id in ids]

    def in_item(self, item_id: str) -> list[ModelElement]:
        """Return elements homed in a content item, ordered by id.

        Args:
            item_id: Content item id.

        Returns:
            Elements.
        """
        return [self.elements[element_id] for element_id in self.item_index.get(item_id, ())]

    def item_present(self, item_id: str) -> bool:
        """Return True if some artefact file declares a block for the item.

        Args:
            item_id: Content item id.

        Returns:
            True if a block exists.
        """
        return any(item_id in artefact.item_spans for artefact in self.artefacts.values())

    def with_elements(self, elements: dict[str, ModelElement]) -> Self:
        """Return a copy of the graph with replaced elements.

        Args:
            elements: New element table, with the same ids.

        Returns:
            New graph.
        """
        return type(self)(
            project=self.project,
            elements=elements,
            edges=self.edges,
            partitions=self.partitions,
            parents=self.parents,
            children=self.children,
            artefacts=self.artefacts,
        )

    def structure(self) -> dict[str, object]:
        """Span-free form of the graph, for isomorphism checks.

        Returns:
            Sorted elements, edges, partitions and containment.
        """
        return {
            "elements": sorted(
                (
                    element.id,
                    element.kind,
                    element.name,
                    element.title,
                    element.status.value,
                    element.home_item,
                    element.artefact_type,
                    tuple(sorted((k, repr(v)) for k, v in element.attributes.items())),
                )
                for element in self.elements.values()
            ),
            "edges": sorted(
                (edge.source, edge.relation.value, edge.target) for edge in self.edges
            ),
            "partitions": {
                artefact: sorted(ids) for artefact, ids in sorted(self.partitions.items())
            },
            "parents": sorted(self.parents.items()),
        }
