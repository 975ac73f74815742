from app.graph.analysis import component_count, cycle_rank, degrees, is_tree, leaf_count
from app.graph.isomorphism import tree_centers, tree_isomorphic
from app.graph.model import MapperGraph, MapperNode
from app.graph.serialization import from_json, summarize, to_dot, to_json

__all__ = [
    "MapperGraph",
    "MapperNode",
    "component_count",
    "cycle_rank",
    "degrees",
    "from_json",
    "is_tree",
    "leaf_count",
    "summarize",
    "to_dot",
    "to_json",
    "tree_centers",
    "tree_isomorphic",
]
