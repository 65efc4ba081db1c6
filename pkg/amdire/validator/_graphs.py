"""Cycle detection helpers."""

from collections.abc import Iterable
from graphlib import CycleError, TopologicalSorter


def find_cycles(edges: Iterable[tuple[str, str]]) -> list[tuple[str, ...]]:
    """Find elementary cycles until the graph is acyclic.

    Each found cycle is broken by removing its first edge, then detection is
    repeated, so every independent cycle is reported once.

    Args:
        edges: (source, target) pairs.

    Returns:
        Cycles in edge direction, each rotated to start at its smallest node,
        in discovery order.
    """
    graph: dict[str, set[str]] = {}
    for source, target in sorted(set(edges)):
        graph.setdefault(source, set()).add(target)
        graph.setdefault(target, set())
    cycles: list[tuple[str, ...]] = []
    while True:
        try:
            TopologicalSorter(graph).prepare()
        except CycleError as error:
            nodes = list(error.args[1][:-1])
            if len(nodes) > 1 and nodes[1] not in graph[nodes[0]]:
                nodes.reverse()
            start = nodes.index(min(nodes))
            nodes = nodes[start:] + nodes[:start]
            cycles.append(tuple(nodes))
            graph[nodes[0]].discard(nodes[1] if len(nodes) > 1 else nodes[0])
        else:
            return cycles
