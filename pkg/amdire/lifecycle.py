"""Milestones and completeness of the artefacts.

Each artefact type has two milestones: the first is reached when its trigger
content item is defined (present, non-empty, every element at or above the
project's status threshold, no errors), the second when the whole artefact is
finalised (every enabled item present and non-empty, every element agreed,
no errors in the artefact).
"""

from collections.abc import Sequence

from amdire.catalog import Catalog, load_catalog
from amdire.types.catalog import MilestoneKind
from amdire.types.diagnostics import Diagnostic, Severity
from amdire.types.graph import ModelGraph, Status
from amdire.types.tailoring import (
    Blocker,
    Completeness,
    ItemProgress,
    MilestoneStatus,
    ProjectConfig,
)
from amdire.validator import validate


def _errors(
    graph: ModelGraph, diagnostics: Sequence[Diagnostic]
) -> tuple[dict[str, int], dict[str, int]]:
    """Count error diagnostics per content item and per artefact type.

    Findings without an item scope count for the item whose block contains
    them.

    Args:
        graph: Linked graph.
        diagnostics: Findings.

    Returns:
        Error counts by item id and by artefact type id.
    """
    by_item: dict[str, int] = {}
    by_artefact: dict[str, int] = {}
    for diagnostic in diagnostics:
        if diagnostic.severity is not Severity.ERROR:
            continue
        span = diagnostic.span
        item = diagnostic.item
        for artefact in graph.artefacts.values():
            if artefact.file != span.file:
                continue
            by_artefact[artefact.artefact_type] = by_artefact.get(artefact.artefact_type, 0) + 1
            if item is None:
                item = next(
                    (
                        item_id
                        for item_id, block in artefact.item_spans.items()
                        if block.covers_line(span.start_line)
                    ),
                    None,
                )
        if item is not None:
            by_item[item] = by_item.get(item, 0) + 1
    return by_item, by_artefact


def _item_progress(
    graph: ModelGraph, item_id: str, item_errors: dict[str, int]
) -> ItemProgress:
    return ItemProgress(
        item=item_id,
        present=graph.item_present(item_id),
        non_empty=bool(graph.in_item(item_id)),
        error_free=not item_errors.get(item_id),
    )


def _below(graph: ModelGraph, item_id: str, threshold: Status) -> list[str]:
    """Return names of the elements of an item below a status.

    Args:
        graph: Linked graph.
        item_id: Content item id.
        threshold: Minimum status.

    Returns:
        Qualified names.
    """
    return [
        element.qualified_name
        for element in graph.in_item(item_id)
        if element.status.rank < threshold.rank
    ]


def _progress_blockers(progress: ItemProgress, errors: int) -> list[Blocker]:
    if not progress.present:
        return [Blocker(item=progress.item, reason="content item is missing")]
    if not progress.non_empty:
        return [Blocker(item=progress.item, reason="content item is empty")]
    if errors:
        return [Blocker(item=progress.item, reason=f"{errors} error(s)")]
    return []


def _status_blocker(names: list[str], item_id: str, status: Status) -> list[Blocker]:
    if not names:
        return []
    shown = ", ".join(names[:5]) + (", ..." if len(names) > 5 else "")
    return [
        Blocker(
            item=item_id,
            reason=f"{len(names)} element(s) below status '{status}': {shown}",
        )
    ]


def milestone_status(
    graph: ModelGraph,
    config: ProjectConfig,
    *,
    diagnostics: Sequence[Diagnostic] | None = None,
    catalog: Catalog | None = None,
) -> list[MilestoneStatus]:
    """Evaluate the milestones of the three artefact types.

    Args:
        graph: Linked graph.
        config: Project configuration.
        diagnostics: Project findings, validation of the graph by default.
        catalog: Catalog, the embedded one by default.

    Returns:
        Six milestone statuses in catalog order.
    """
    catalog = catalog or load_catalog()
    if diagnostics is None:
        diagnostics = validate(graph, catalog, config)
    item_errors, artefact_errors = _errors(graph, diagnostics)
    statuses: list[MilestoneStatus] = []
    for artefact in catalog.artefact_types:
        first, final = catalog.milestones_for(artefact.id)
        trigger = first.trigger_item or artefact.content_items[0]
        progress = _item_progress(graph, trigger, item_errors)
        blocking = _progress_blockers(progress, item_errors.get(trigger, 0))
        if progress.non_empty:
            blocking += _status_blocker(
                _below(graph, trigger, config.milestone_threshold),
                trigger,
                config.milestone_threshold,
            )
        first_reached = not blocking
        statuses.append(
            MilestoneStatus(
                milestone=first.id,
                artefact_type=artefact.id,
                kind=MilestoneKind.FIRST_ITEM_DEFINED,
                reached=first_reached,
                blocking=tuple(blocking),
            )
        )

        final_blocking: list[Blocker] = []
        if artefact.id not in graph.artefacts:
            final_blocking.append(
                Blocker(item=artefact.id, reason="artefact file is missing")
            )
        for item_id in config.items.get(artefact.id, ()):
            item_progress = _item_progress(graph, item_id, item_errors)
            final_blocking += _progress_blockers(item_progress, 0)
            if item_progress.non_empty:
                final_blocking += _status_blocker(
                    _below(graph, item_id, Status.AGREED), item_id, Status.AGREED
                )
        if errors := artefact_errors.get(artefact.id, 0):
            final_blocking.append(
                Blocker(item=artefact.id, reason=f"{errors} error(s) in the artefact")
            )
        if not first_reached:
            final_blocking.append(
                Blocker(item=trigger, reason=f"milestone {first.id} is not reached")
            )
        statuses.append(
            MilestoneStatus(
                milestone=final.id,
                artefact_type=artefact.id,
                kind=MilestoneKind.FINALISED,
                reached=not final_blocking,
                blocking=tuple(final_blocking),
            )
        )
    return statuses


def completeness(
    graph: ModelGraph,
    config: ProjectConfig,
    artefact_type: str,
    *,
    diagnostics: Sequence[Diagnostic] | None = None,
    catalog: Catalog | None = None,
) -> Completeness:
    """Measure the share of complete enabled items of an artefact type.

    An item is complete when present, non-empty and free of errors.

    Args:
        graph: Linked graph.
        config: Project configuration.
        artefact_type: Artefact type id, keyword or alias.
        diagnostics: Project findings, validation of the graph by default.
        catalog: Catalog, the embedded one by default.

    Returns:
        Ratio and per-item breakdown, 1.0 if no item is enabled.
    """
    catalog = catalog or load_catalog()
    artefact = catalog.artefact_type(artefact_type)
    if diagnostics is None:
        diagnostics = validate(graph, catalog, config)
    item_errors, _ = _errors(graph, diagnostics)
    items = tuple(
        _item_progress(graph, item_id, item_errors)
        for item_id in config.items.get(artefact.id, ())
    )
    ratio = sum(item.complete for item in items) / len(items) if items else 1.0
    return Completeness(artefact_type=artefact.id, ratio=ratio, items=items)
