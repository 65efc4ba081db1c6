"""Traceability matrices along realisation chains."""

from amdire.catalog import Catalog
from amdire.exceptions import UnknownKindError, UsageError
from amdire.types.catalog import RelationKind
from amdire.types.graph import ModelGraph
from amdire.types.reporting import TraceMatrix, TraceRow

#: Two-hop chains: (from kind, to kind) -> intermediate kind
CHAINS = {("DataElement", "BusinessObject"): "DataObject"}


def trace_pairs(catalog: Catalog) -> list[tuple[str, str]]:
    """Return the kind pairs a matrix can be computed for.

    Args:
        catalog: Catalog.

    Returns:
        Sorted (from kind, to kind) pairs.
    """
    pairs = {
        (rule.source_kind, target)
        for rule in catalog.relation_rules
        if rule.relation is RelationKind.REALISES
        for target in rule.target_kinds
    }
    return sorted(pairs | set(CHAINS))


def _kind(catalog: Catalog, name: str) -> str:
    try:
        return catalog.concept(name).kind
    except UnknownKindError as error:
        raise UsageError(str(error)) from None


def trace_matrix(
    graph: ModelGraph, from_kind: str, to_kind: str, catalog: Catalog
) -> TraceMatrix:
    """Tabulate the elements of a kind against their realisation targets.

    Args:
        graph: Linked graph.
        from_kind: Source kind, CamelCase or ARDL keyword.
        to_kind: Target kind, CamelCase or ARDL keyword.
        catalog: Catalog.

    Returns:
        One row per source element, ordered by id.

    Raises:
        UsageError: No realisation path links the kinds.
    """
    source_kind = _kind(catalog, from_kind)
    target_kind = _kind(catalog, to_kind)
    pairs = trace_pairs(catalog)
    if (source_kind, target_kind) not in pairs:
        valid = [target for source, target in pairs if source == source_kind]
        hint = (
            f"valid target kinds for {source_kind}: {', '.join(valid)}"
            if valid
            else f"{source_kind} realises no kind, valid sources: "
            + ", ".join(sorted({source for source, _ in pairs}))
        )
        msg = f"No realisation path from {source_kind} to {target_kind}, {hint}"
        raise UsageError(msg)
    via = CHAINS.get((source_kind, target_kind))

    def realised(element_id: str, kind: str) -> list[str]:
        return [
            edge.target
            for edge in graph.outgoing(element_id, RelationKind.REALISES)
            if graph.elements[edge.target].kind == kind
        ]

    rows = []
    for source in graph.of_kind(source_kind):
        if via is None:
            targets = realised(source.id, target_kind)
        else:
            targets = [
                target
                for middle in realised(source.id, via)
                for target in realised(middle, target_kind)
            ]
        rows.append(TraceRow(source=source.id, targets=tuple(sorted(set(targets)))))
    return TraceMatrix(from_kind=source_kind, to_kind=target_kind, via=via, rows=tuple(rows))


def format_matrix(matrix: TraceMatrix) -> str:
    """Format a matrix as a text table with a coverage summary line.

    Args:
        matrix: Matrix.

    Returns:
        Text.
    """
    header = (matrix.from_kind, matrix.to_kind)
    width = max([len(header[0]), *(len(row.source) for row in matrix.rows)])
    lines = [f"{header[0]:<{width}}  {header[1]}", f"{'-' * width}  {'-' * len(header[1])}"]
    lines.extend(
        f"{row.source:<{width}}  {', '.join(row.targets) if row.targets else '(none)'}"
        for row in matrix.rows
    )
    chain = f" via {matrix.via}" if matrix.via else ""
    lines.append(
        f"{matrix.from_kind} -> {matrix.to_kind}{chain}: "
        f"{matrix.covered_count}/{len(matrix.rows)} covered ({matrix.coverage:.0%})"
    )
    return "\n".join(lines) + "\n"
