from __future__ import annotations

import logging

from app.graph.model import MapperGraph

logger = logging.getLogger(__name__)


def simplify(graph: MapperGraph) -> MapperGraph:
    """
    Contract every node with exactly two incident edges to two distinct neighbours.

    The replacement edge carries the weights of both removed edges plus the
    contracted node's pixel count. One ascending pass over node ids reaches the
    fixed point: a contraction never changes another node's degree.
    """
    multigraph = graph.to_networkx()

    for node in graph.nodes:
        if multigraph.degree(node.id) != 2:
            continue
        incident = list(multigraph.edges(node.id, data="weight"))
        if len(incident) != 2:
            continue
        (_, a, weight_a), (_, b, weight_b) = incident
        if a == b or node.id in (a, b):
            continue
        multigraph.remove_node(node.id)
        multigraph.add_edge(a, b, weight=weight_a + weight_b + node.count)

    kept = [node for node in graph.nodes if node.id in multigraph]
    edges = [(a, b) for a, b, _ in multigraph.edges(data="weight")]
    weights = [weight for _, _, weight in multigraph.edges(data="weight")]
    result = MapperGraph.build(kept, edges, weights)

    logger.debug(
        "Simplified %d nodes / %d edges to %d / %d",
        graph.n_nodes,
        graph.n_edges,
        result.n_nodes,
        result.n_edges,
    )
    return result
