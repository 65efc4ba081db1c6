"""Risk list checks."""

from collections.abc import Iterator

from amdire.codes import RISK_WITHOUT_FACTOR
from amdire.types.catalog import RelationKind
from amdire.types.diagnostics import Diagnostic
from amdire.validator import ValidationContext


def risks_caused(context: ValidationContext) -> Iterator[Diagnostic]:
    """Requirements risks are caused by a risk factor (AMD070)."""
    for risk in context.graph.of_kind("RequirementsRisk"):
        if not context.targets(risk, RelationKind.CAUSED_BY, "RiskFactor"):
            yield RISK_WITHOUT_FACTOR.diagnostic(
                f"{context.describe(risk)} is not caused by any RiskFactor",
                risk.span,
                item=risk.home_item,
            )


CHECKS = (risks_caused,)
