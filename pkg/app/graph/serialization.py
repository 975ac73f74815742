from __future__ import annotations

import math

import graphviz

from pydantic import ValidationError

from app.errors import GraphFormatError, GraphParameterError
from app.graph.analysis import component_count, cycle_rank, is_tree
from app.graph.model import MapperGraph, MapperNode
from app.schemas.graph import GraphPayload, GraphSummary, NodePayload

# inches for the largest node
MAX_NODE_WIDTH = 1.5


def to_payload(graph: MapperGraph) -> GraphPayload:
    return GraphPayload(
        nodes=[
            NodePayload(
                id=node.id,
                interval=node.interval_index,
                pixel=node.pixel,
                count=node.count,
                mean=node.mean,
                cx=node.cx,
                cy=node.cy,
            )
            for node in graph.nodes
        ],
        edges=list(graph.edges),
        weights=list(graph.weights) if graph.weights else None,
    )


def from_payload(payload: GraphPayload) -> MapperGraph:
    nodes = tuple(
        MapperNode(
            id=node.id,
            interval_index=node.interval,
            pixel=node.pixel,
            count=node.count,
            mean=node.mean,
            cx=node.cx,
            cy=node.cy,
        )
        for node in payload.nodes
    )
    try:
        return MapperGraph(
            nodes=nodes,
            edges=tuple(tuple(edge) for edge in payload.edges),
            weights=tuple(payload.weights or ()),
        )
    except GraphParameterError as e:
        raise GraphFormatError(str(e)) from e


def to_json(graph: MapperGraph) -> str:
    return to_payload(graph).model_dump_json(exclude_none=True)


def from_json(text: str | bytes) -> MapperGraph:
    try:
        payload = GraphPayload.model_validate_json(text)
    except ValidationError as e:
        raise GraphFormatError(f"Malformed graph JSON: {e}") from e
    return from_payload(payload)


def summarize(graph: MapperGraph) -> GraphSummary:
    return GraphSummary(
        **to_payload(graph).model_dump(),
        cycle_rank=cycle_rank(graph),
        is_tree=is_tree(graph),
        components=component_count(graph),
    )


def to_dot(graph: MapperGraph, name: str = "mapper") -> str:
    """
    Undirected DOT text. Node width grows with sqrt(pixel count); nodes of one
    cover interval share a rank, drawn bottom to top by interval (and so by
    mean value).
    """
    dot = graphviz.Graph(name=name)
    dot.attr(rankdir="BT")
    dot.attr("node", shape="circle", fixedsize="true")

    largest = max((node.count for node in graph.nodes), default=1)
    by_interval: dict[int, list[MapperNode]] = {}
    for node in graph.nodes:
        by_interval.setdefault(node.interval_index, []).append(node)

    for interval in sorted(by_interval):
        with dot.subgraph(name=f"interval_{interval}") as rank:
            rank.attr(rank="same")
            for node in by_interval[interval]:
                width = MAX_NODE_WIDTH * math.sqrt(node.count / largest)
                rank.node(
                    str(node.id),
                    label=str(node.id),
                    width=f"{max(width, 0.05):.3f}",
                    tooltip=f"count={node.count} mean={node.mean:.6g}",
                )

    weights = graph.weights or (None,) * graph.n_edges
    for (a, b), weight in zip(graph.edges, weights):
        if weight:
            dot.edge(str(a), str(b), label=str(weight))
        else:
            dot.edge(str(a), str(b))
    return dot.source
