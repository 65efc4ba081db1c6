"""Linker: symbol table, reference resolution and model graph construction.

Fully qualified names are `<alias>.<containing element names>.<name>`, where
the alias is declared for the file in the project manifest. Element ids equal
their fully qualified name; a duplicate declaration gets a `#<n>` suffix so
that it stays addressable in the graph without shadowing the first one.
"""

from collections.abc import Iterable, Sequence
from typing import NamedTuple

from amdire.catalog import Catalog, load_catalog
from amdire.codes import (
    AMBIGUOUS_REFERENCE,
    ATTRIBUTE_TYPE_MISMATCH,
    DUPLICATE_ARTEFACT,
    DUPLICATE_ASSIGNMENT,
    DUPLICATE_NAME,
    DUPLICATE_RELATION,
    FOREIGN_CONTENT_ITEM,
    MISPLACED_ELEMENT,
    MISSING_HEADER,
    UNKNOWN_ATTRIBUTE,
    UNRESOLVED_REFERENCE,
)
from amdire.exceptions import AmbiguousReferenceError, NotFoundError
from amdire.types.catalog import (
    ArtefactTypeDef,
    AttributeType,
    ContentItemDef,
    RelationKind,
)
from amdire.types.diagnostics import Diagnostic, RelatedNote, sort_diagnostics
from amdire.types.graph import (
    ArtefactInfo,
    GraphScalar,
    GraphValue,
    ModelEdge,
    ModelElement,
    ModelGraph,
    Reference,
    Status,
)
from amdire.types.syntax import (
    AttributeValue,
    NodeKind,
    ParsedFile,
    QualifiedName,
    Span,
    SyntaxNode,
)
from amdire.types.tailoring import ProjectConfig


class SymbolTable:
    """Name to element id lookup with partial qualification support.

    A reference resolves, in order, by exact fully qualified name, by exact
    name after stripping the project name prefix, then by unique
    segment-aligned suffix (`StandardWithdrawal.VerifyPin`).
    """

    __slots__ = ("_by_name", "_by_suffix", "_project")

    def __init__(self, project: str = "") -> None:
        """Initialize an empty table.

        Args:
            project: Project name accepted as reference prefix.
        """
        self._project = project
        self._by_name: dict[str, str] = {}
        self._by_suffix: dict[str, list[str]] = {}

    def declare(self, qualified_name: str, element_id: str) -> bool:
        """Declare a name.

        Args:
            qualified_name: Fully qualified name.
            element_id: Element id.

        Returns:
            False if the name was already declared.
        """
        if qualified_name in self._by_name:
            return False
        self._by_name[qualified_name] = element_id
        parts = qualified_name.split(".")
        for index in range(1, len(parts)):
            self._by_suffix.setdefault(".".join(parts[index:]), []).append(element_id)
        return True

    def lookup(self, name: str) -> str:
        """Resolve a possibly partially qualified name.

        Args:
            name: Name as written.

        Returns:
            Element id.

        Raises:
            NotFoundError: No element matches.
            AmbiguousReferenceError: Several elements match a partial name.
        """
        names = [name]
        prefix = f"{self._project}."
        if self._project and name.startswith(prefix):
            names.append(name.removeprefix(prefix))
        for candidate in names:
            if candidate in self._by_name:
                return self._by_name[candidate]
        for candidate in names:
            matches = sorted(set(self._by_suffix.get(candidate, ())))
            if len(matches) == 1:
                return matches[0]
            if matches:
                raise AmbiguousReferenceError(name, matches)
        raise NotFoundError(name)

    @classmethod
    def from_elements(cls, project: str, elements: Iterable[ModelElement]) -> "SymbolTable":
        """Build a table from graph elements.

        Args:
            project: Project name.
            elements: Elements, duplicates (ids differing from their name) are skipped.

        Returns:
            Symbol table.
        """
        table = cls(project)
        for element in sorted(elements, key=lambda element: element.id):
            if element.id == element.qualified_name:
                table.declare(element.qualified_name, element.id)
        return table


def resolve(graph: ModelGraph, qualified_name: str) -> str:
    """Resolve a name in a linked graph.

    Args:
        graph: Linked graph.
        qualified_name: Fully or partially qualified name.

    Returns:
        Element id.
    """
    return SymbolTable.from_elements(graph.project, graph.elements.values()).lookup(
        qualified_name
    )


class _PendingRelation(NamedTuple):
    source: str
    relation: RelationKind
    target: QualifiedName
    span: Span


class _PendingReference(NamedTuple):
    element: str
    attribute: str
    reference: str


_SCALAR_TYPES: dict[AttributeType, tuple[type, ...]] = {
    AttributeType.TEXT: (str,),
    AttributeType.NUMBER: (int, float),
    AttributeType.BOOLEAN: (bool,),
    AttributeType.LIST: (tuple,),
    AttributeType.REFERENCE: (Reference,),
}


def _graph_value(value: AttributeValue) -> GraphValue:
    """Convert a syntax value to a graph value.

    Args:
        value: Syntax value.

    Returns:
        Graph value, qualified names become unresolved references.
    """
    if isinstance(value, QualifiedName):
        return Reference(path=str(value))
    if isinstance(value, tuple):
        items: list[GraphScalar] = [
            Reference(path=str(item)) if isinstance(item, QualifiedName) else item
            for item in value
        ]
        return tuple(items)
    return value


def _matches_type(value: GraphValue, type_: AttributeType) -> bool:
    if isinstance(value, bool):
        return type_ is AttributeType.BOOLEAN
    return isinstance(value, _SCALAR_TYPES[type_])


class _Linker:
    """Single link run."""

    def __init__(self, catalog: Catalog, config: ProjectConfig) -> None:
        self._catalog = catalog
        self._symbols = SymbolTable(config.name)
        self._project = config.name
        self.elements: dict[str, ModelElement] = {}
        self.edges: list[ModelEdge] = []
        self.parents: dict[str, str] = {}
        self.children: dict[str, list[str]] = {}
        self.partitions: dict[str, set[str]] = {
            artefact.id: set() for artefact in catalog.artefact_types
        }
        self.artefacts: dict[str, ArtefactInfo] = {}
        self.diagnostics: list[Diagnostic] = []
        self._relations: list[_PendingRelation] = []
        self._references: list[_PendingReference] = []

    def add_file(self, parsed: ParsedFile) -> None:
        """Declare the elements of one file.

        Args:
            parsed: Parsed file.
        """
        root = parsed.root
        artefact = (
            self._catalog.artefact_index.get(root.keyword) if root.keyword else None
        )
        if artefact is None:
            self.diagnostics.append(
                MISSING_HEADER.diagnostic(
                    f"File '{parsed.path}' has no valid artefact header", root.span
                )
            )
            return
        head = root.head or root.span
        if artefact.id in self.artefacts:
            first = self.artefacts[artefact.id]
            self.diagnostics.append(
                DUPLICATE_ARTEFACT.diagnostic(
                    f"{artefact.display_name} is already declared by '{first.file}'",
                    head,
                    related=(RelatedNote(span=first.span, note="first declared here"),),
                )
            )
            return
        item_spans: dict[str, Span] = {}
        for block in root.children:
            item = self._catalog.item_by_keyword(artefact.id, block.keyword or "")
            if item is None:
                self.diagnostics.append(
                    FOREIGN_CONTENT_ITEM.diagnostic(
                        f"Content item '{block.keyword}' is not part of the "
                        f"{artefact.display_name}",
                        block.head or block.span,
                    )
                )
                continue
            item_spans.setdefault(item.id, block.span)
            for node in block.children:
                if node.node_kind is NodeKind.ELEMENT_DECL:
                    self._add_element(node, artefact, item, parsed.alias, None)
        self.artefacts[artefact.id] = ArtefactInfo(
            artefact_type=artefact.id,
            file=parsed.path,
            alias=parsed.alias,
            title=root.title,
            span=head,
            item_spans=item_spans,
        )

    def _add_element(
        self,
        node: SyntaxNode,
        artefact: ArtefactTypeDef,
        item: ContentItemDef,
        prefix: str,
        parent: str | None,
    ) -> None:
        """Declare an element and its nested elements.

        Args:
            node: ElementDecl node.
            artefact: Artefact type of the file.
            item: Enclosing content item.
            prefix: Qualified name of the enclosing scope.
            parent: Parent element id.
        """
        concept = self._catalog.concept(node.keyword or "")
        head = node.head or node.span
        if concept.home_item != item.id:
            home = self._catalog.content_item(concept.home_item)
            self.diagnostics.append(
                MISPLACED_ELEMENT.diagnostic(
                    f"{concept.kind} '{node.identifier}' belongs in {home.display_name}"
                    f" ({self._catalog.artefact_type(home.artefact_type).display_name}),"
                    f" not in {item.display_name}",
                    head,
                    item=item.id,
                )
            )
            return
        name = node.identifier or ""
        qualified_name = f"{prefix}.{name}"
        element_id = qualified_name
        if not self._symbols.declare(qualified_name, element_id):
            counter = 2
            while f"{qualified_name}#{counter}" in self.elements:
                counter += 1
            element_id = f"{qualified_name}#{counter}"
            first = self.elements[qualified_name]
            self.diagnostics.append(
                DUPLICATE_NAME.diagnostic(
                    f"Duplicate name '{qualified_name}'",
                    head,
                    related=(RelatedNote(span=first.span, note="first declared here"),),
                    item=item.id,
                )
            )
        status = Status.DRAFT
        attributes: dict[str, GraphValue] = {}
        assigned: set[str] = set()
        for child in node.children:
            match child.node_kind:
                case NodeKind.STATUS_CLAUSE:
                    if "status" in assigned:
                        self._duplicate_assignment("status", name, child.span, item)
                    assigned.add("status")
                    status = Status(str(child.value))
                case NodeKind.ATTRIBUTE_ASSIGN:
                    attribute = child.identifier or ""
                    if attribute in assigned:
                        self._duplicate_assignment(attribute, name, child.span, item)
                    assigned.add(attribute)
                    value = _graph_value(child.value)  # type: ignore[arg-type]
                    attributes[attribute] = value
                    self._check_attribute(concept.kind, name, attribute, value, child.span, item)
                    if isinstance(value, Reference):
                        self._references.append(
                            _PendingReference(element_id, attribute, value.path)
                        )
                case NodeKind.RELATION_CLAUSE:
                    relation = self._catalog.relation(child.relation_name or "")
                    self._relations.extend(
                        _PendingRelation(element_id, relation, target, child.span)
                        for target in child.targets
                    )
                case _:
                    pass
        self.elements[element_id] = ModelElement(
            id=element_id,
            kind=concept.kind,
            name=name,
            qualified_name=qualified_name,
            title=node.title,
            attributes=attributes,
            status=status,
            home_item=concept.home_item,
            artefact_type=artefact.id,
            span=node.span,
        )
        self.partitions[artefact.id].add(element_id)
        if parent is not None:
            self.parents[element_id] = parent
            self.children.setdefault(parent, []).append(element_id)
        for child in node.children:
            if child.node_kind is NodeKind.ELEMENT_DECL:
                self._add_element(child, artefact, item, qualified_name, element_id)

    def _duplicate_assignment(self, attribute: str, name: str, span: Span, item: ContentItemDef) -> None:
        self.diagnostics.append(
            DUPLICATE_ASSIGNMENT.diagnostic(
                f"'{attribute}' of '{name}' is assigned twice, the last value is used",
                span,
                item=item.id,
            )
        )

    def _check_attribute(
        self,
        kind: str,
        name: str,
        attribute: str,
        value: GraphValue,
        span: Span,
        item: ContentItemDef,
    ) -> None:
        """Check an attribute against the kind's declared attributes.

        Args:
            kind: Concept kind.
            name: Element name.
            attribute: Attribute name.
            value: Attribute value.
            span: Assignment span.
            item: Enclosing content item.
        """
        definition = next(
            (
                definition
                for definition in self._catalog.attributes_of(kind)
                if definition.name == attribute
            ),
            None,
        )
        if definition is None:
            known = ", ".join(sorted(d.name for d in self._catalog.attributes_of(kind)))
            self.diagnostics.append(
                UNKNOWN_ATTRIBUTE.diagnostic(
                    f"{kind} '{name}' has no attribute '{attribute}', expected one of: {known}",
                    span,
                    item=item.id,
                )
            )
        elif not _matches_type(value, definition.type):
            self.diagnostics.append(
                ATTRIBUTE_TYPE_MISMATCH.diagnostic(
                    f"Attribute '{attribute}' of {kind} '{name}' expects a {definition.type} value",
                    span,
                    item=item.id,
                )
            )

    def _lookup_sibling(self, element_id: str, name: str) -> str | None:
        """Find a sibling element by simple name.

        Args:
            element_id: Element whose siblings are searched.
            name: Simple name.

        Returns:
            Sibling id, or None.
        """
        parent = self.parents.get(element_id)
        if parent is None or "." in name:
            return None
        for sibling in self.children.get(parent, ()):
            if self.elements[sibling].name == name:
                return sibling
        return None

    def resolve_all(self) -> None:
        """Resolve pending relation targets and reference attributes."""
        seen: set[tuple[str, RelationKind, str]] = set()
        for pending in self._relations:
            name = str(pending.target)
            home_item = self.elements[pending.source].home_item
            try:
                target = self._symbols.lookup(name)
            except NotFoundError:
                self.diagnostics.append(
                    UNRESOLVED_REFERENCE.diagnostic(
                        f"Unresolved reference '{name}'", pending.span, item=home_item
                    )
                )
                continue
            except AmbiguousReferenceError as error:
                self.diagnostics.append(
                    AMBIGUOUS_REFERENCE.diagnostic(
                        f"Ambiguous reference '{name}', candidates: {', '.join(error.candidates)}",
                        pending.span,
                        related=tuple(
                            RelatedNote(
                                span=self.elements[candidate].span,
                                note=f"candidate {self.elements[candidate].kind} '{candidate}'",
                            )
                            for candidate in error.candidates
                        ),
                        item=home_item,
                    )
                )
                continue
            triple = (pending.source, pending.relation, target)
            if triple in seen:
                self.diagnostics.append(
                    DUPLICATE_RELATION.diagnostic(
                        f"Duplicate relation '{pending.relation.keyword} {name}'",
                        pending.span,
                        item=home_item,
                    )
                )
                continue
            seen.add(triple)
            self.edges.append(
                ModelEdge(
                    source=pending.source,
                    relation=pending.relation,
                    target=target,
                    span=pending.span,
                )
            )
        for reference in self._references:
            target = self._lookup_sibling(reference.element, reference.reference)
            if target is None:
                try:
                    target = self._symbols.lookup(reference.reference)
                except (NotFoundError, AmbiguousReferenceError):
                    continue
            element = self.elements[reference.element]
            attributes = dict(element.attributes)
            attributes[reference.attribute] = Reference(path=reference.reference, target=target)
            self.elements[reference.element] = element.model_copy(update={"attributes": attributes})

    def graph(self) -> ModelGraph:
        """Build the graph.

        Returns:
            Model graph.
        """
        return ModelGraph(
            project=self._project,
            elements=self.elements,
            edges=tuple(self.edges),
            partitions={key: frozenset(ids) for key, ids in self.partitions.items()},
            parents=self.parents,
            children={key: tuple(ids) for key, ids in self.children.items()},
            artefacts=self.artefacts,
        )


def link(
    files: Sequence[ParsedFile],
    catalog: Catalog | None = None,
    config: ProjectConfig | None = None,
) -> tuple[ModelGraph, list[Diagnostic]]:
    """Link parsed files into a model graph.

    The graph is always returned, even when references cannot be resolved.
    Files are processed in path order, so the result does not depend on the
    order of `files`.

    Args:
        files: Parsed files of one project.
        catalog: Catalog, the embedded one by default.
        config: Project configuration, supplies the project name.

    Returns:
        Model graph and sorted link diagnostics.
    """
    linker = _Linker(catalog or load_catalog(), config or ProjectConfig())
    for parsed in sorted(files, key=lambda parsed: (parsed.path, parsed.alias)):
        linker.add_file(parsed)
    linker.resolve_all()
    return linker.graph(), sort_diagnostics(linker.diagnostics)
