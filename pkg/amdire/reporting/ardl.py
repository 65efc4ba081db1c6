"""Canonical ARDL renderer.

The canonical form has LF line endings, two-space indentation, one member per
line, content items in catalog order and elements in declaration order. Inside
an element the status comes first, then attributes, relations grouped per
relation, and nested elements.
"""

from decimal import Decimal

from amdire.ardl.lexer import escape
from amdire.catalog import Catalog
from amdire.types.graph import GraphScalar, GraphValue, ModelElement, ModelGraph, Reference
from amdire.types.tailoring import ProjectConfig

_INDENT = "  "


def _decimal(value: float) -> str:
    # NUMBER tokens have no exponent form.
    text = format(Decimal(repr(value)), "f")
    return text if "." in text else f"{text}.0"


def _scalar(value: GraphScalar) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Reference):
        return value.path
    if isinstance(value, float):
        return _decimal(value)
    if isinstance(value, int):
        return str(value)
    return f'"{escape(value)}"'


def _value(value: GraphValue) -> str:
    if isinstance(value, tuple):
        return f"[{', '.join(_scalar(item) for item in value)}]"
    return _scalar(value)


def _element(
    graph: ModelGraph, catalog: Catalog, element: ModelElement, depth: int
) -> list[str]:
    """Render an element and its nested elements.

    Args:
        graph: Linked graph.
        catalog: Catalog.
        element: Element.
        depth: Indentation depth.

    Returns:
        Lines.
    """
    pad = _INDENT * depth
    head = f"{catalog.concept(element.kind).keyword} {element.name}"
    if element.title is not None:
        head += f' "{escape(element.title)}"'
    lines = [f"{pad}{head} {{", f"{pad}{_INDENT}status: {element.status}"]
    lines.extend(
        f"{pad}{_INDENT}{name}: {_value(value)}"
        for name, value in element.attributes.items()
    )
    grouped: dict[str, list[str]] = {}
    for edge in graph.outgoing(element.id):
        grouped.setdefault(edge.relation.keyword, []).append(
            graph.elements[edge.target].qualified_name
        )
    lines.extend(
        f"{pad}{_INDENT}{keyword} {', '.join(targets)}"
        for keyword, targets in grouped.items()
    )
    for child in graph.children.get(element.id, ()):
        lines.extend(_element(graph, catalog, graph.elements[child], depth + 1))
    lines.append(f"{pad}}}")
    return lines


def render_ardl(
    graph: ModelGraph, artefact_type: str, config: ProjectConfig, catalog: Catalog
) -> str:
    """Render one artefact in canonical ARDL.

    Content items declared in the source, or holding elements, are rendered.
    An artefact without a source file renders with an empty block per enabled
    item, which is the skeleton written by `amdire init`.

    Args:
        graph: Linked graph.
        artefact_type: Artefact type id.
        config: Project configuration.
        catalog: Catalog.

    Returns:
        ARDL text.
    """
    artefact = catalog.artefact_type(artefact_type)
    info = graph.artefacts.get(artefact.id)
    title = info.title if info is not None and info.title is not None else artefact.display_name
    roots: dict[str, list[ModelElement]] = {}
    for element in graph.elements.values():
        if element.artefact_type == artefact.id and element.id not in graph.parents:
            roots.setdefault(element.home_item, []).append(element)
    if info is None:
        items = [
            item_id
            for item_id in artefact.content_items
            if item_id in roots or config.enabled(item_id)
        ]
    else:
        items = [
            item_id
            for item_id in artefact.content_items
            if item_id in roots or item_id in info.item_spans
        ]
    lines = [f'{artefact.keyword} "{escape(title)}" {{']
    for index, item_id in enumerate(items):
        if index:
            lines.append("")
        lines.append(f"{_INDENT}{catalog.content_item(item_id).keyword} {{")
        for element in roots.get(item_id, ()):
            lines.extend(_element(graph, catalog, element, 2))
        lines.append(f"{_INDENT}}}")
    lines.append("}")
    return "\n".join(lines) + "\n"
