"""Structure view checks: content item presence and domain stereotypes."""

from collections.abc import Iterator

from amdire.codes import MISSING_CONTENT_ITEM, STEREOTYPED_CONTENT
from amdire.types.diagnostics import Diagnostic
from amdire.validator import ValidationContext


def missing_content_items(context: ValidationContext) -> Iterator[Diagnostic]:
    """Mandatory enabled items must be present and non-empty (AMD020)."""
    graph = context.graph
    for artefact in context.catalog.artefact_types:
        info = graph.artefacts.get(artefact.id)
        span = info.span if info else context.fallback_span()
        for item_id in context.config.items.get(artefact.id, ()):
            item = context.catalog.content_item(item_id)
            if not item.mandatory:
                continue
            if info is None or item_id not in info.item_spans:
                problem = "is missing"
            elif not graph.in_item(item_id):
                problem = "is empty"
            else:
                continue
            yield MISSING_CONTENT_ITEM.diagnostic(
                f"Mandatory content item {item.display_name} of the "
                f"{artefact.display_name} {problem}",
                span,
                item=item_id,
            )


def stereotyped_content(context: ValidationContext) -> Iterator[Diagnostic]:
    """Items stereotyped for another domain must stay empty (AMD081)."""
    for info in context.graph.artefacts.values():
        for item_id, span in info.item_spans.items():
            item = context.catalog.content_item(item_id)
            if context.profile.admits(item.domain_stereotype):
                continue
            if not context.graph.in_item(item_id):
                continue
            yield STEREOTYPED_CONTENT.diagnostic(
                f"{item.display_name} is reserved to the {item.domain_stereotype} "
                f"domain, not part of the '{context.profile}' profile",
                span,
            )


CHECKS = (missing_content_items, stereotyped_content)
