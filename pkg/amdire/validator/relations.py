"""Relation conformance against the catalog rule table."""

from collections.abc import Iterator

from amdire.codes import MULTIPLICITY_EXCEEDED, RELATION_NOT_ALLOWED
from amdire.types.catalog import RelationKind
from amdire.types.diagnostics import Diagnostic, RelatedNote
from amdire.validator import ValidationContext


def relation_kinds(context: ValidationContext) -> Iterator[Diagnostic]:
    """Every edge is sanctioned by a relation rule (AMD080).

    Realisations of states are left to the dedicated state check.
    """
    catalog = context.catalog
    elements = context.graph.elements
    for edge in context.graph.edges:
        source = elements[edge.source]
        if source.kind == "State" and edge.relation is RelationKind.REALISES:
            continue
        target = elements[edge.target]
        if catalog.check_relation(source.kind, edge.relation, target.kind).allowed:
            continue
        expected = catalog.target_kinds(source.kind, edge.relation)
        hint = (
            f"expected target kinds: {', '.join(expected)}"
            if expected
            else f"{source.kind} has no '{edge.relation.keyword}' relation"
        )
        yield RELATION_NOT_ALLOWED.diagnostic(
            f"'{edge.relation.keyword}' from {context.describe(source)} to "
            f"{context.describe(target)} is not allowed, {hint}",
            edge.span,
            item=source.home_item,
        )


def relation_multiplicities(context: ValidationContext) -> Iterator[Diagnostic]:
    """Relations with an upper bound of one have at most one target (AMD082)."""
    catalog = context.catalog
    graph = context.graph
    for source in graph.elements.values():
        edges = graph.outgoing(source.id)
        for relation in sorted({edge.relation for edge in edges}):
            for rule in catalog.rules_for(source.kind, relation):
                if rule.multiplicity.upper != 1:
                    continue
                matching = [
                    edge
                    for edge in edges
                    if edge.relation is relation
                    and graph.elements[edge.target].kind in rule.target_kinds
                ]
                if len(matching) > 1:
                    yield MULTIPLICITY_EXCEEDED.diagnostic(
                        f"{context.describe(source)} has {len(matching)} "
                        f"'{relation.keyword}' targets among "
                        f"{', '.join(sorted(rule.target_kinds))}, "
                        f"{rule.multiplicity} allows one",
                        matching[1].span,
                        related=(RelatedNote(span=matching[0].span, note="first target"),),
                        item=source.home_item,
                    )


CHECKS = (relation_kinds, relation_multiplicities)
