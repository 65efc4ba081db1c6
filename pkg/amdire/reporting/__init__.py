"""Specification documents, traceability matrices and diagnostic reports."""

from collections.abc import Sequence

from amdire.catalog import Catalog, load_catalog
from amdire.exceptions import UsageError
from amdire.lifecycle import milestone_status
from amdire.reporting.ardl import render_ardl
from amdire.reporting.diagnostics import emit_diagnostics
from amdire.reporting.markdown import render_markdown
from amdire.reporting.trace import format_matrix, trace_matrix, trace_pairs
from amdire.tailoring import default_config
from amdire.types.graph import ModelGraph
from amdire.types.reporting import DocumentFormat, RenderedDocument
from amdire.types.tailoring import MilestoneStatus, ProjectConfig

__all__ = [
    "emit_diagnostics",
    "format_matrix",
    "render_spec",
    "trace_matrix",
    "trace_pairs",
]


def render_spec(
    graph: ModelGraph,
    artefact_type: str,
    output_format: DocumentFormat | str,
    *,
    config: ProjectConfig | None = None,
    catalog: Catalog | None = None,
    milestones: Sequence[MilestoneStatus] | None = None,
) -> RenderedDocument:
    """Render a specification document.

    Args:
        graph: Linked graph.
        artefact_type: Artefact type id, keyword or alias.
        output_format: `markdown` or `ardl`.
        config: Project configuration, untailored by default.
        catalog: Catalog, the embedded one by default.
        milestones: Milestone statuses shown in markdown front matter,
            evaluated from the graph by default.

    Returns:
        Rendered document.

    Raises:
        UsageError: Unknown format.
    """
    catalog = catalog or load_catalog()
    config = config or default_config(catalog, name=graph.project)
    artefact = catalog.artefact_type(artefact_type).id
    document_format: DocumentFormat
    if output_format == "ardl":
        document_format = "ardl"
        body = render_ardl(graph, artefact, config, catalog)
    elif output_format == "markdown":
        document_format = "markdown"
        if milestones is None:
            milestones = milestone_status(graph, config, catalog=catalog)
        body = render_markdown(graph, artefact, config, catalog, milestones)
    else:
        msg = f"Unknown document format '{output_format}', expected markdown or ardl"
        raise UsageError(msg)
    return RenderedDocument(artefact_type=artefact, format=document_format, body=body)
