from __future__ import annotations

import networkx as nx

from app.graph.model import MapperGraph


def component_count(graph: MapperGraph) -> int:
    if not graph.nodes:
        return 0
    return nx.number_connected_components(graph.to_networkx())


def cycle_rank(graph: MapperGraph) -> int:
    return graph.n_edges - graph.n_nodes + component_count(graph)


def is_tree(graph: MapperGraph) -> bool:
    return (
        graph.n_nodes >= 1 and component_count(graph) == 1 and cycle_rank(graph) == 0
    )


def degrees(graph: MapperGraph) -> dict[int, int]:
    return dict(graph.to_networkx().degree())


def leaf_count(graph: MapperGraph) -> int:
    return sum(1 for degree in degrees(graph).values() if degree == 1)
