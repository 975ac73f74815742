from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import networkx as nx

from app.errors import GraphParameterError


@dataclass(frozen=True)
class MapperNode:
    """
    One region of a cover element's pre-image.

    ``pixel`` is the region id (its minimum linear pixel index); ``id`` is the
    graph-wide node id, unique even when regions of two cover parts start at
    the same pixel.
    """

    id: int
    interval_index: int
    pixel: int
    count: int
    mean: float
    cx: float
    cy: float


@dataclass(frozen=True)
class MapperGraph:
    nodes: tuple[MapperNode, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()
    # pixels absorbed into each edge by simplification, parallel to edges
    weights: tuple[int, ...] = field(default=())

    def __post_init__(self):
        ids = [node.id for node in self.nodes]
        if len(set(ids)) != len(ids):
            raise GraphParameterError("Node ids must be unique")
        known = set(ids)
        for a, b in self.edges:
            if a not in known or b not in known:
                raise GraphParameterError(f"Edge ({a}, {b}) references a missing node")
        if self.weights and len(self.weights) != len(self.edges):
            raise GraphParameterError("weights must be parallel to edges")

    @classmethod
    def build(
        cls,
        nodes: Iterable[MapperNode],
        edges: Iterable[tuple[int, int]],
        weights: Iterable[int] | None = None,
    ) -> MapperGraph:
        """Canonical form: nodes by id, edges as sorted (low, high) pairs."""
        nodes = tuple(sorted(nodes, key=lambda node: node.id))
        pairs = [(min(a, b), max(a, b)) for a, b in edges]
        if weights is None:
            return cls(nodes=nodes, edges=tuple(sorted(pairs)))

        ordered = sorted(zip(pairs, weights))
        return cls(
            nodes=nodes,
            edges=tuple(pair for pair, _ in ordered),
            weights=tuple(int(weight) for _, weight in ordered),
        )

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def node_by_id(self) -> dict[int, MapperNode]:
        return {node.id: node for node in self.nodes}

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for node in self.nodes:
            graph.add_node(node.id, node=node)
        weights = self.weights or (0,) * len(self.edges)
        for (a, b), weight in zip(self.edges, weights):
            graph.add_edge(a, b, weight=weight)
        return graph
