from app.ctree.contour_tree import (
    contour_arcs,
    contour_tree,
    merge_tree_graph,
    reduce_tree,
)
from app.ctree.critical import critical_values, tree_critical_values
from app.ctree.sweep import (
    MergeTree,
    NodeKind,
    SweepDirection,
    join_tree_sweep,
    split_tree_sweep,
    sweep_order,
)

__all__ = [
    "MergeTree",
    "NodeKind",
    "SweepDirection",
    "contour_arcs",
    "contour_tree",
    "critical_values",
    "join_tree_sweep",
    "merge_tree_graph",
    "reduce_tree",
    "split_tree_sweep",
    "sweep_order",
    "tree_critical_values",
]
