"""Goal model checks."""

from collections.abc import Iterator

from amdire.codes import (
    GOAL_CYCLE,
    GOAL_NOT_ISSUED,
    SYSTEM_GOAL_UNRELATED,
    SYSTEM_GOAL_WITHOUT_QUALITY,
    USAGE_GOAL_UNRELATED,
)
from amdire.types.catalog import RelationKind
from amdire.types.diagnostics import Diagnostic, RelatedNote
from amdire.validator import ValidationContext
from amdire.validator._graphs import find_cycles

_GOALS = ("BusinessGoal", "UsageGoal", "SystemGoal")


def goals_related(context: ValidationContext) -> Iterator[Diagnostic]:
    """Usage goals relate to business goals, system goals to usage goals (AMD050, AMD051)."""
    for kind, parent, rule in (
        ("UsageGoal", "BusinessGoal", USAGE_GOAL_UNRELATED),
        ("SystemGoal", "UsageGoal", SYSTEM_GOAL_UNRELATED),
    ):
        for goal in context.graph.of_kind(kind):
            if not context.targets(goal, RelationKind.RELATED_TO, parent):
                yield rule.diagnostic(
                    f"{context.describe(goal)} is not related to any {parent}",
                    goal.span,
                    item=goal.home_item,
                )


def goal_cycles(context: ValidationContext) -> Iterator[Diagnostic]:
    """Goal refinement builds a hierarchy (AMD052)."""
    graph = context.graph
    goals = {goal.id for goal in graph.of_kind(*_GOALS)}
    edges = [
        (edge.source, edge.target)
        for edge in graph.edges
        if edge.relation is RelationKind.REFINES
        and edge.source in goals
        and edge.target in goals
    ]
    for cycle in find_cycles(edges):
        first = graph.elements[cycle[0]]
        yield GOAL_CYCLE.diagnostic(
            f"Goal hierarchy cycle: {' -> '.join((*cycle, cycle[0]))}",
            first.span,
            related=tuple(
                RelatedNote(span=graph.elements[node].span, note="part of the cycle")
                for node in cycle[1:]
            ),
            item=first.home_item,
        )


def goals_issued(context: ValidationContext) -> Iterator[Diagnostic]:
    """Goals are issued by a stakeholder or user group (AMD053)."""
    for goal in context.graph.of_kind(*_GOALS):
        if not context.targets(goal, RelationKind.ISSUED_BY, "Stakeholder", "UserGroup"):
            yield GOAL_NOT_ISSUED.diagnostic(
                f"{context.describe(goal)} is not issued by any Stakeholder or UserGroup",
                goal.span,
                item=goal.home_item,
            )


def system_goals_demand_quality(context: ValidationContext) -> Iterator[Diagnostic]:
    """System goals demand quality attributes (AMD054)."""
    for goal in context.graph.of_kind("SystemGoal"):
        if not context.targets(
            goal, RelationKind.DEMANDS_QUALITY_ATTRIBUTE, "QualityAttribute"
        ):
            yield SYSTEM_GOAL_WITHOUT_QUALITY.diagnostic(
                f"{context.describe(goal)} demands no QualityAttribute",
                goal.span,
                item=goal.home_item,
            )


CHECKS = (goals_related, goal_cycles, goals_issued, system_goals_demand_quality)
