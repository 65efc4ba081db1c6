"""Usage model checks."""

from collections.abc import Iterator

from amdire.codes import SCENARIO_NOT_TRIGGERED, USE_CASE_WITHOUT_SCENARIO
from amdire.types.catalog import RelationKind
from amdire.types.diagnostics import Diagnostic
from amdire.validator import ValidationContext


def use_case_scenarios(context: ValidationContext) -> Iterator[Diagnostic]:
    """Use cases hold at least one functional scenario (AMD060).

    A scenario counts when nested in the use case or refining it.
    """
    for use_case in context.graph.of_kind("UseCase"):
        if context.nested(use_case, "FunctionalScenario") or context.sources(
            use_case, RelationKind.REFINES, "FunctionalScenario"
        ):
            continue
        yield USE_CASE_WITHOUT_SCENARIO.diagnostic(
            f"{context.describe(use_case)} has no FunctionalScenario",
            use_case.span,
            item=use_case.home_item,
        )


def scenarios_triggered(context: ValidationContext) -> Iterator[Diagnostic]:
    """Functional scenarios are triggered by events (AMD061)."""
    for scenario in context.graph.of_kind("FunctionalScenario"):
        if not context.sources(scenario, RelationKind.TRIGGERS, "Event"):
            yield SCENARIO_NOT_TRIGGERED.diagnostic(
                f"{context.describe(scenario)} is not triggered by any Event",
                scenario.span,
                item=scenario.home_item,
            )


CHECKS = (use_case_scenarios, scenarios_triggered)
