"""Cross-level realisation checks.

Lower-level elements realise higher-level ones: actors realise user groups or
external systems, data objects realise business objects, system functions
realise system actions or user-visible functions, and so on. Rules whose
target kind belongs to a domain outside the active profile are skipped.
"""

from collections.abc import Iterator

from amdire.codes import (
    ACTION_NOT_REALISED,
    ACTOR_NOT_REALISED,
    DATA_ELEMENT_NOT_REALISED,
    DATA_OBJECT_NOT_REALISED,
    INTERFACE_NOT_REALISED,
    MAJOR_FUNCTION_NOT_REALISED,
    STATE_NOT_REALISED,
    STATE_REALISES_NON_MODE,
    SYSTEM_FUNCTION_NOT_REALISED,
)
from amdire.types.catalog import RelationKind
from amdire.types.diagnostics import Diagnostic, Rule
from amdire.validator import ValidationContext

_REALISES = RelationKind.REALISES

#: rule, source kinds, required target kinds
_REQUIRED = (
    (ACTOR_NOT_REALISED, ("Actor",), ("UserGroup", "ExternalSystem")),
    (DATA_OBJECT_NOT_REALISED, ("DataObject",), ("BusinessObject",)),
    (ACTION_NOT_REALISED, ("ActorAction", "SystemAction"), ("ProcessStep",)),
    (SYSTEM_FUNCTION_NOT_REALISED, ("SystemFunction",), ("SystemAction", "UserVisibleFunction")),
    (DATA_ELEMENT_NOT_REALISED, ("DataElement",), ("DataObject",)),
    (INTERFACE_NOT_REALISED, ("SystemInterface",), ("Interface",)),
    (STATE_NOT_REALISED, ("State",), ("Mode",)),
    (MAJOR_FUNCTION_NOT_REALISED, ("MajorFunction",), ("UserVisibleFunction",)),
)

#: Boolean attribute exempting an element, per source kind
_EXEMPT_WHEN = {"SystemFunction": ("internal", True), "SystemInterface": ("external", False)}


def _required(
    context: ValidationContext, rule: Rule, sources: tuple[str, ...], targets: tuple[str, ...]
) -> Iterator[Diagnostic]:
    if not all(context.admits(kind) for kind in targets):
        return
    for element in context.graph.of_kind(*sources):
        exemption = _EXEMPT_WHEN.get(element.kind)
        if exemption:
            name, exempt_value = exemption
            if bool(element.attributes.get(name, False)) is exempt_value:
                continue
        if context.targets(element, _REALISES, *targets):
            continue
        yield rule.diagnostic(
            f"{context.describe(element)} does not realise any {' or '.join(targets)}",
            element.span,
            item=element.home_item,
        )


def required_realisations(context: ValidationContext) -> Iterator[Diagnostic]:
    """Lower-level elements must realise their higher-level counterpart (AMD030-AMD038)."""
    for rule, sources, targets in _REQUIRED:
        yield from _required(context, rule, sources, targets)


def states_realise_modes(context: ValidationContext) -> Iterator[Diagnostic]:
    """States realise nothing but modes (AMD035)."""
    for state in context.graph.of_kind("State"):
        for edge in context.graph.outgoing(state.id, _REALISES):
            target = context.graph.elements[edge.target]
            if target.kind != "Mode":
                yield STATE_REALISES_NON_MODE.diagnostic(
                    f"{context.describe(state)} realises {context.describe(target)}, "
                    "states may only realise a Mode",
                    edge.span,
                    item=state.home_item,
                )


CHECKS = (required_realisations, states_realise_modes)
