"""System specification checks: decomposition and behaviour."""

from collections.abc import Iterator

from amdire.codes import COMPONENT_CYCLE, TRANSITION_STATE_MISSING
from amdire.types.catalog import RelationKind
from amdire.types.diagnostics import Diagnostic, RelatedNote
from amdire.types.graph import Reference
from amdire.validator import ValidationContext
from amdire.validator._graphs import find_cycles


def component_cycles(context: ValidationContext) -> Iterator[Diagnostic]:
    """Component decomposition is acyclic (AMD071)."""
    graph = context.graph
    components = {component.id for component in graph.of_kind("Component")}
    edges = [
        (edge.source, edge.target)
        for edge in graph.edges
        if edge.relation is RelationKind.COMPOSES
        and edge.source in components
        and edge.target in components
    ]
    for cycle in find_cycles(edges):
        first = graph.elements[cycle[0]]
        yield COMPONENT_CYCLE.diagnostic(
            f"Component decomposition cycle: {' -> '.join((*cycle, cycle[0]))}",
            first.span,
            related=tuple(
                RelatedNote(span=graph.elements[node].span, note="part of the cycle")
                for node in cycle[1:]
            ),
            item=first.home_item,
        )


def transition_states(context: ValidationContext) -> Iterator[Diagnostic]:
    """State transitions connect existing states (AMD072)."""
    elements = context.graph.elements
    for transition in context.graph.of_kind("StateTransition"):
        for end in ("source", "target"):
            value = transition.attributes.get(end)
            if not isinstance(value, Reference):
                problem = f"has no {end} state"
            elif value.target is None:
                problem = f"{end} state '{value.path}' does not exist"
            elif elements[value.target].kind != "State":
                problem = f"{end} '{value.path}' is a {elements[value.target].kind}, not a State"
            else:
                continue
            yield TRANSITION_STATE_MISSING.diagnostic(
                f"{context.describe(transition)} {problem}",
                transition.span,
                item=transition.home_item,
            )


CHECKS = (component_cycles, transition_states)
