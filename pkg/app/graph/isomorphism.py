from __future__ import annotations

import networkx as nx

from networkx.algorithms.isomorphism import tree_isomorphism

from app.errors import GraphParameterError
from app.graph.analysis import is_tree
from app.graph.model import MapperGraph


def _as_tree(graph: MapperGraph, caller: str) -> nx.Graph:
    if not is_tree(graph):
        raise GraphParameterError(f"{caller} needs trees")
    return nx.Graph(graph.to_networkx())


def tree_centers(graph: MapperGraph) -> list[int]:
    """One or two centers of a tree."""
    return sorted(nx.center(_as_tree(graph, "tree_centers")))


def tree_isomorphic(first: MapperGraph, second: MapperGraph) -> bool:
    """Structure-only isomorphism test for trees; node attributes are ignored."""
    first_tree = _as_tree(first, "tree_isomorphic")
    second_tree = _as_tree(second, "tree_isomorphic")
    return bool(tree_isomorphism(first_tree, second_tree))
