"""Rule engine over the linked model graph.

Checks live in the submodules of this package: each non-private submodule
exposes a top-level `CHECKS` tuple of functions taking a `ValidationContext`
and yielding diagnostics. Checks are discovered on first use, in module name
order, and are independent pure functions of the context.
"""

from collections.abc import Callable, Iterable
from functools import cache
from importlib import import_module
from pkgutil import iter_modules

from amdire.catalog import Catalog, load_catalog
from amdire.codes import list_rules as _list_rules
from amdire.tailoring import default_config
from amdire.types.catalog import DomainProfile, RelationKind
from amdire.types.diagnostics import Diagnostic, Rule, Severity, sort_diagnostics
from amdire.types.graph import ModelElement, ModelGraph
from amdire.types.syntax import Span
from amdire.types.tailoring import ProjectConfig


class ValidationContext:
    """Inputs of one validation run, with graph navigation helpers."""

    __slots__ = ("catalog", "config", "graph")

    def __init__(self, graph: ModelGraph, catalog: Catalog, config: ProjectConfig) -> None:
        """Initialize the context.

        Args:
            graph: Linked graph.
            catalog: Catalog.
            config: Project configuration.
        """
        self.graph = graph
        self.catalog = catalog
        self.config = config

    @property
    def profile(self) -> DomainProfile:
        """Active domain profile."""
        return self.config.domain_profile

    def targets(
        self, element: ModelElement, relation: RelationKind, *kinds: str
    ) -> list[ModelElement]:
        """Return relation targets of an element.

        Args:
            element: Source element.
            relation: Relation.
            *kinds: Target kinds to keep, all if empty.

        Returns:
            Target elements in declaration order.
        """
        elements = self.graph.elements
        found = [elements[edge.target] for edge in self.graph.outgoing(element.id, relation)]
        return [target for target in found if not kinds or target.kind in kinds]

    def sources(
        self, element: ModelElement, relation: RelationKind, *kinds: str
    ) -> list[ModelElement]:
        """Return elements relating to an element.

        Args:
            element: Target element.
            relation: Relation.
            *kinds: Source kinds to keep, all if empty.

        Returns:
            Source elements in declaration order.
        """
        elements = self.graph.elements
        found = [elements[edge.source] for edge in self.graph.incoming(element.id, relation)]
        return [source for source in found if not kinds or source.kind in kinds]

    def nested(self, element: ModelElement, *kinds: str) -> list[ModelElement]:
        """Return the direct children of an element.

        Args:
            element: Parent element.
            *kinds: Child kinds to keep, all if empty.

        Returns:
            Child elements in declaration order.
        """
        elements = self.graph.elements
        found = [elements[child] for child in self.graph.children.get(element.id, ())]
        return [child for child in found if not kinds or child.kind in kinds]

    def admits(self, kind: str) -> bool:
        """Return True if the kind's domain stereotype fits the active profile.

        Args:
            kind: Concept kind.

        Returns:
            True if admitted.
        """
        return self.profile.admits(self.catalog.concept(kind).domain_stereotype)

    def describe(self, element: ModelElement) -> str:
        """Return the display form of an element used in messages.

        Args:
            element: Element.

        Returns:
            Kind and qualified name.
        """
        return f"{element.kind} '{element.qualified_name}'"

    def fallback_span(self) -> Span:
        """Location used for findings without a source location."""
        return Span(
            file=self.config.manifest, start_line=1, start_col=1, end_line=1, end_col=1
        )


#: Check function
type Check = Callable[[ValidationContext], Iterable[Diagnostic]]


@cache
def discover_checks() -> tuple[Check, ...]:
    """Discover the checks of the validator submodules.

    Returns:
        Checks in module name, then declaration order.

    Raises:
        ImportError: A submodule has no valid `CHECKS` tuple.
    """
    checks: list[Check] = []
    modules = sorted(
        module_info.name
        for module_info in iter_modules(import_module(__name__).__path__)
        if not module_info.name.startswith("_")
    )
    for name in modules:
        module = import_module(f"{__name__}.{name}")
        try:
            checks.extend(module.CHECKS)
        except (TypeError, AttributeError) as exc:  # pragma: no cover
            msg = f"Module {__name__}.{name} has an invalid 'CHECKS'"
            raise ImportError(msg) from exc
    return tuple(checks)


def apply_config(
    diagnostics: Iterable[Diagnostic], config: ProjectConfig, catalog: Catalog | None = None
) -> list[Diagnostic]:
    """Apply tailoring and severity overrides to findings.

    Findings scoped to a content item that is disabled, or excluded by the
    domain profile, are dropped. Overrides change severities; `off` drops
    the finding.

    Args:
        diagnostics: Findings.
        config: Project configuration.
        catalog: Catalog, the embedded one by default.

    Returns:
        Sorted findings.
    """
    catalog = catalog or load_catalog()
    kept: list[Diagnostic] = []
    for diagnostic in diagnostics:
        item = diagnostic.item
        if item is not None and (
            item in config.disabled
            or not config.domain_profile.admits(catalog.content_item(item).domain_stereotype)
        ):
            continue
        override = config.severity_overrides.get(diagnostic.code)
        if override == "off":
            continue
        if override is not None and override != diagnostic.severity:
            diagnostic = diagnostic.model_copy(update={"severity": Severity(override)})
        kept.append(diagnostic)
    return sort_diagnostics(kept)


def validate(
    graph: ModelGraph, catalog: Catalog | None = None, config: ProjectConfig | None = None
) -> list[Diagnostic]:
    """Evaluate every rule over a linked graph.

    Args:
        graph: Linked graph.
        catalog: Catalog, the embedded one by default.
        config: Project configuration, all items enabled under the `both`
            profile by default.

    Returns:
        Findings sorted by file, line, column, code and message.
    """
    catalog = catalog or load_catalog()
    config = config or default_config(catalog)
    context = ValidationContext(graph, catalog, config)
    diagnostics = [
        diagnostic for check in discover_checks() for diagnostic in check(context)
    ]
    return apply_config(diagnostics, config, catalog)


def list_rules(catalog: Catalog | None = None) -> list[Rule]:  # noqa: ARG001
    """Return the model rules of the registry.

    Syntax codes (`ARD`) belong to the parser and are left out.

    Args:
        catalog: Catalog the rules apply to.

    Returns:
        `AMD` rules sorted by code.
    """
    return [rule for rule in _list_rules() if rule.code.startswith("AMD")]
