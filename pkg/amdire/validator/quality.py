"""Quality refinement checks.

Quality requirements must be assessable and derived from system goals: a
generic scenario refining (or related to) a system goal satisfies the quality
requirement, which is assessed by a metric or a normative reference.
"""

from collections.abc import Iterator

from amdire.codes import QUALITY_NOT_ASSESSED, QUALITY_NOT_REACHABLE
from amdire.types.catalog import RelationKind
from amdire.types.diagnostics import Diagnostic
from amdire.validator import ValidationContext


def quality_assessed(context: ValidationContext) -> Iterator[Diagnostic]:
    """Quality requirements are assessed by a metric or normative reference (AMD040)."""
    for requirement in context.graph.of_kind("QualityRequirement"):
        if not context.targets(
            requirement, RelationKind.ASSESSED_BY, "Metric", "NormativeReference"
        ):
            yield QUALITY_NOT_ASSESSED.diagnostic(
                f"{context.describe(requirement)} is not assessed by any Metric "
                "or NormativeReference",
                requirement.span,
                item=requirement.home_item,
            )


def quality_reachable(context: ValidationContext) -> Iterator[Diagnostic]:
    """Quality requirements derive from a system goal via a generic scenario (AMD041)."""
    reachable: set[str] = set()
    for scenario in context.graph.of_kind("GenericScenario"):
        if context.targets(scenario, RelationKind.REFINES, "SystemGoal") or context.targets(
            scenario, RelationKind.RELATED_TO, "SystemGoal"
        ):
            reachable.update(
                requirement.id
                for requirement in context.targets(
                    scenario, RelationKind.SATISFIES, "QualityRequirement"
                )
            )
    requirements = context.graph.of_kind("QualityRequirement")
    changed = True
    while changed:
        changed = False
        for requirement in requirements:
            if requirement.id in reachable:
                continue
            if any(
                parent.id in reachable
                for parent in context.targets(
                    requirement, RelationKind.REFINES, "QualityRequirement"
                )
            ):
                reachable.add(requirement.id)
                changed = True
    for requirement in requirements:
        if requirement.id not in reachable:
            yield QUALITY_NOT_REACHABLE.diagnostic(
                f"{context.describe(requirement)} is not satisfied by any GenericScenario "
                "derived from a SystemGoal",
                requirement.span,
                item=requirement.home_item,
            )


CHECKS = (quality_assessed, quality_reachable)
