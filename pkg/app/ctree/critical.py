from __future__ import annotations

import numpy as np

from app.ctree.sweep import MergeTree, join_tree_sweep, split_tree_sweep
from app.field.scalar_field import Connectivity, ScalarField


def tree_critical_values(tree: MergeTree) -> np.ndarray:
    """Ascending distinct values of the leaves, merges and root of one sweep tree."""
    critical = tree.children != 1
    critical[tree.root] = True
    return np.unique(tree.values[critical])


def critical_values(
    field: ScalarField, conn: Connectivity = Connectivity.FOUR
) -> np.ndarray:
    """
    Ascending distinct values where sublevel or superlevel topology changes,
    plus the global minimum and maximum.
    """
    join = join_tree_sweep(field, conn)
    split = split_tree_sweep(field, conn)
    values = field.flat
    critical = (join.children != 1) | (split.children != 1)
    return np.unique(
        np.concatenate([values[critical], [values.min(), values.max()]])
    )
