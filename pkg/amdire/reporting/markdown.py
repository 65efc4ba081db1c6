"""Markdown specification documents."""

from collections.abc import Sequence

from amdire.catalog import Catalog
from amdire.types.graph import GraphScalar, GraphValue, ModelElement, ModelGraph, Reference
from amdire.types.tailoring import MilestoneStatus, ProjectConfig

#: Text of an empty content item
PLACEHOLDER = "_No content yet._"


def _scalar(value: GraphScalar) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Reference):
        return f"`{value.target or value.path}`"
    return str(value)


def _value(value: GraphValue) -> str:
    if isinstance(value, tuple):
        return ", ".join(_scalar(item) for item in value)
    return _scalar(value)


def _cell(text: str) -> str:
    return text.replace("|", "\\|").replace("\n", " ")


def _quoted(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _relations(graph: ModelGraph, element: ModelElement) -> dict[str, list[str]]:
    grouped: dict[str, list[str]] = {}
    for edge in graph.outgoing(element.id):
        grouped.setdefault(edge.relation.keyword, []).append(f"`{edge.target}`")
    return grouped


def _element(graph: ModelGraph, element: ModelElement, depth: int) -> list[str]:
    """Render an element section.

    Args:
        graph: Linked graph.
        element: Element.
        depth: Heading depth.

    Returns:
        Lines.
    """
    heading = f"{'#' * min(depth, 6)} {element.kind} `{element.name}`"
    if element.title:
        heading += f": {element.title}"
    lines = [heading, "", f"- Status: {element.status}"]
    lines.extend(
        f"- {name.capitalize()}: {_value(value)}"
        for name, value in element.attributes.items()
    )
    lines.extend(
        f"- {keyword.capitalize()}: {', '.join(targets)}"
        for keyword, targets in _relations(graph, element).items()
    )
    lines.append("")
    for child in graph.children.get(element.id, ()):
        lines.extend(_element(graph, graph.elements[child], depth + 1))
    return lines


def _glossary(graph: ModelGraph, terms: Sequence[ModelElement]) -> list[str]:
    """Render glossary terms as a table.

    Elements nested in a term follow the table as sections.

    Args:
        graph: Linked graph.
        terms: Glossary terms.

    Returns:
        Lines.
    """
    lines = [
        "| Term | Abbreviation | Synonyms | Description | Relations | Status |",
        "| --- | --- | --- | --- | --- | --- |",
    ]
    nested: list[str] = []
    for term in terms:
        attributes = term.attributes
        relations = "; ".join(
            f"{keyword} {', '.join(targets)}"
            for keyword, targets in _relations(graph, term).items()
        )
        lines.append(
            "| "
            + " | ".join(
                _cell(cell)
                for cell in (
                    term.title or term.name,
                    _value(attributes.get("abbreviation", "")),
                    _value(attributes.get("synonyms", ())),
                    _value(attributes.get("description", "")),
                    relations,
                    term.status,
                )
            )
            + " |"
        )
        for child in graph.children.get(term.id, ()):
            nested.extend(_element(graph, graph.elements[child], 3))
    return [*lines, "", *nested]


def _use_case_overview(graph: ModelGraph) -> list[str]:
    lines = ["### Use Case Overview", ""]
    use_cases = graph.of_kind("UseCase")
    if not use_cases:
        return [*lines, PLACEHOLDER, ""]
    lines.extend(
        f"- `{use_case.id}`" + (f": {use_case.title}" if use_case.title else "")
        for use_case in use_cases
    )
    return [*lines, ""]


def render_markdown(
    graph: ModelGraph,
    artefact_type: str,
    config: ProjectConfig,
    catalog: Catalog,
    milestones: Sequence[MilestoneStatus],
) -> str:
    """Render one artefact as a markdown document.

    The document starts with a front matter block holding the milestone
    status, then has one section per enabled content item in catalog order.

    Args:
        graph: Linked graph.
        artefact_type: Artefact type id.
        config: Project configuration.
        catalog: Catalog.
        milestones: Milestone statuses of the project.

    Returns:
        Markdown text.
    """
    artefact = catalog.artefact_type(artefact_type)
    info = graph.artefacts.get(artefact.id)
    title = info.title if info is not None and info.title else artefact.display_name
    lines = [
        "---",
        f"artefact: {artefact.id}",
        f"title: {_quoted(title)}",
    ]
    if graph.project or config.name:
        lines.append(f"project: {graph.project or config.name}")
    role = config.roles.get(artefact.owning_role)
    if role:
        lines.append(f"{artefact.owning_role}: {_quoted(role)}")
    lines.append("milestones:")
    lines.extend(
        f"  {status.milestone}: {'reached' if status.reached else 'not reached'}"
        for status in milestones
        if status.artefact_type == artefact.id
    )
    lines += ["---", "", f"# {artefact.display_name}: {title}", ""]

    roots: dict[str, list[ModelElement]] = {}
    for element in graph.elements.values():
        if element.artefact_type == artefact.id and element.id not in graph.parents:
            roots.setdefault(element.home_item, []).append(element)
    for item_id in config.items.get(artefact.id, ()):
        item = catalog.content_item(item_id)
        lines += [f"## {item.display_name}", ""]
        elements = roots.get(item_id, [])
        if item_id == "Glossary" and elements:
            lines += _glossary(graph, elements)
        elif elements:
            for element in elements:
                lines += _element(graph, element, 3)
        else:
            lines += [PLACEHOLDER, ""]
        if item_id == "SystemVision":
            lines += _use_case_overview(graph)
    return "\n".join(lines).rstrip("\n") + "\n"
