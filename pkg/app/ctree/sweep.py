from __future__ import annotations

import logging

from dataclasses import dataclass
from enum import IntEnum, StrEnum

import numba as nb
import numpy as np

from app.field.scalar_field import EIGHT_OFFSETS, Connectivity, ScalarField

logger = logging.getLogger(__name__)

_ROW_STEPS = np.array([dr for dr, _ in EIGHT_OFFSETS], dtype=np.int64)
_COL_STEPS = np.array([dc for _, dc in EIGHT_OFFSETS], dtype=np.int64)


class SweepDirection(StrEnum):
    JOIN = "join"
    SPLIT = "split"


class NodeKind(IntEnum):
    REGULAR = 0
    LEAF = 1
    MERGE = 2
    ROOT = 3


@nb.njit(cache=True, nogil=True)
def find_root(forest, x):
    while forest[x] != x:
        forest[x] = forest[forest[x]]
        x = forest[x]
    return x


@nb.njit(cache=True, nogil=True)
def _sweep(order, width, height, n_steps, row_steps, col_steps):
    n = order.size
    forest = np.full(n, -1, dtype=np.int64)
    size = np.ones(n, dtype=np.int64)
    head = np.empty(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    children = np.zeros(n, dtype=np.int64)
    for v in order:
        forest[v] = v
        head[v] = v
        row = v // width
        col = v - row * width
        for k in range(n_steps):
            r = row + row_steps[k]
            c = col + col_steps[k]
            if r < 0 or r >= height or c < 0 or c >= width:
                continue
            q = r * width + c
            if forest[q] < 0:
                continue
            a = find_root(forest, q)
            b = find_root(forest, v)
            if a == b:
                continue
            # the component's most recent vertex hangs below v
            parent[head[a]] = v
            children[v] += 1
            if size[a] > size[b]:
                a, b = b, a
            forest[a] = b
            size[b] += size[a]
            head[b] = v
    return parent, children


@dataclass(frozen=True, eq=False)
class MergeTree:
    """
    Augmented join or split tree: every pixel is a vertex, ``parent`` links
    point along the sweep (towards higher values for join, lower for split).
    """

    direction: SweepDirection
    values: np.ndarray
    order: np.ndarray
    parent: np.ndarray
    children: np.ndarray

    @property
    def root(self) -> int:
        return int(self.order[-1])

    @property
    def kinds(self) -> np.ndarray:
        kinds = np.full(self.parent.size, NodeKind.REGULAR, dtype=np.int64)
        kinds[self.children == 0] = NodeKind.LEAF
        kinds[self.children >= 2] = NodeKind.MERGE
        if self.children[self.root] < 2:
            kinds[self.root] = NodeKind.ROOT
        return kinds

    @property
    def leaves(self) -> np.ndarray:
        return np.flatnonzero(self.children == 0)

    @property
    def merges(self) -> np.ndarray:
        return np.flatnonzero(self.children >= 2)

    @property
    def arcs(self) -> np.ndarray:
        below = np.flatnonzero(self.parent >= 0)
        return np.stack([below, self.parent[below]], axis=1)

    def branches_alive(self, threshold: float) -> int:
        """Components of the sublevel (join) or superlevel (split) set at ``threshold``."""
        has_parent = self.parent >= 0
        upper = np.where(has_parent, self.values[np.maximum(self.parent, 0)], 0.0)
        if self.direction is SweepDirection.JOIN:
            inside = self.values <= threshold
            escapes = ~has_parent | (upper > threshold)
        else:
            inside = self.values >= threshold
            escapes = ~has_parent | (upper < threshold)
        return int(np.count_nonzero(inside & escapes))


def sweep_order(field: ScalarField) -> np.ndarray:
    """Ascending (value, linear index) order."""
    return np.lexsort((np.arange(field.size), field.flat))


def _run_sweep(
    field: ScalarField, conn: Connectivity, order: np.ndarray, direction: SweepDirection
) -> MergeTree:
    n_steps = 8 if Connectivity(conn).eight else 4
    parent, children = _sweep(
        np.ascontiguousarray(order, dtype=np.int64),
        field.width,
        field.height,
        n_steps,
        _ROW_STEPS,
        _COL_STEPS,
    )
    tree = MergeTree(
        direction=direction,
        values=field.flat,
        order=order,
        parent=parent,
        children=children,
    )
    logger.debug(
        "%s sweep: %d leaves, %d merges", direction, tree.leaves.size, tree.merges.size
    )
    return tree


def join_tree_sweep(
    field: ScalarField, conn: Connectivity = Connectivity.FOUR
) -> MergeTree:
    return _run_sweep(field, conn, sweep_order(field), SweepDirection.JOIN)


def split_tree_sweep(
    field: ScalarField, conn: Connectivity = Connectivity.FOUR
) -> MergeTree:
    # descending value, ties by descending index
    return _run_sweep(field, conn, sweep_order(field)[::-1], SweepDirection.SPLIT)
