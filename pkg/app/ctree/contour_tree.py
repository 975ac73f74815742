from __future__ import annotations

import logging

import numba as nb
import numpy as np

from app.ctree.sweep import MergeTree, find_root, join_tree_sweep, split_tree_sweep
from app.field.scalar_field import Connectivity, ScalarField
from app.graph.model import MapperGraph, MapperNode

logger = logging.getLogger(__name__)


@nb.njit(cache=True, nogil=True)
def _merge_trees(join_parent, join_children, split_parent, split_children):
    n = join_parent.size
    jp = join_parent.copy()
    jd = join_children.copy()
    sp = split_parent.copy()
    su = split_children.copy()
    # a vertex with one child finds it as the sum of its children's indices
    j_child_sum = np.zeros(n, dtype=np.int64)
    s_child_sum = np.zeros(n, dtype=np.int64)
    for v in range(n):
        if jp[v] >= 0:
            j_child_sum[jp[v]] += v
        if sp[v] >= 0:
            s_child_sum[sp[v]] += v

    queue = np.empty(n, dtype=np.int64)
    tail = 0
    for v in range(n):
        if su[v] + jd[v] == 1:
            queue[tail] = v
            tail += 1

    arcs = np.empty((max(n - 1, 0), 2), dtype=np.int64)
    n_arcs = 0
    head = 0
    remaining = n
    while head < tail and remaining > 1:
        x = queue[head]
        head += 1
        if su[x] == 0:
            # upper leaf: attach to its split parent, splice out of the join tree
            y = sp[x]
            su[y] -= 1
            s_child_sum[y] -= x
            child = j_child_sum[x]
            up = jp[x]
            jp[child] = up
            if up >= 0:
                j_child_sum[up] += child - x
        else:
            y = jp[x]
            jd[y] -= 1
            j_child_sum[y] -= x
            child = s_child_sum[x]
            up = sp[x]
            sp[child] = up
            if up >= 0:
                s_child_sum[up] += child - x
        arcs[n_arcs, 0] = x
        arcs[n_arcs, 1] = y
        n_arcs += 1
        remaining -= 1
        if su[y] + jd[y] == 1:
            queue[tail] = y
            tail += 1
    return arcs[:n_arcs]


@nb.njit(cache=True, nogil=True)
def _contract_and_prune(arcs, values):
    n = values.size
    forest = np.arange(n)
    for i in range(arcs.shape[0]):
        a = arcs[i, 0]
        b = arcs[i, 1]
        if values[a] == values[b]:
            ra = find_root(forest, a)
            rb = find_root(forest, b)
            if ra < rb:
                forest[rb] = ra
            elif rb < ra:
                forest[ra] = rb

    rep = np.empty(n, dtype=np.int64)
    for v in range(n):
        rep[v] = find_root(forest, v)

    degree = np.zeros(n, dtype=np.int64)
    kept_arcs = np.empty_like(arcs)
    m = 0
    for i in range(arcs.shape[0]):
        a = rep[arcs[i, 0]]
        b = rep[arcs[i, 1]]
        if a != b:
            kept_arcs[m, 0] = a
            kept_arcs[m, 1] = b
            degree[a] += 1
            degree[b] += 1
            m += 1

    offsets = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        offsets[v + 1] = offsets[v] + degree[v]
    fill = offsets[:-1].copy()
    adjacency = np.empty(2 * m, dtype=np.int64)
    for i in range(m):
        a = kept_arcs[i, 0]
        b = kept_arcs[i, 1]
        adjacency[fill[a]] = b
        fill[a] += 1
        adjacency[fill[b]] = a
        fill[b] += 1

    kept = np.zeros(n, dtype=np.bool_)
    for v in range(n):
        kept[v] = rep[v] == v and degree[v] != 2

    edges = np.empty((max(m, 1), 2), dtype=np.int64)
    n_edges = 0
    for v in range(n):
        if not kept[v]:
            continue
        for k in range(offsets[v], offsets[v + 1]):
            previous = v
            current = adjacency[k]
            while not kept[current]:
                first = adjacency[offsets[current]]
                nxt = first if first != previous else adjacency[offsets[current] + 1]
                previous = current
                current = nxt
            if v < current:
                edges[n_edges, 0] = v
                edges[n_edges, 1] = current
                n_edges += 1
    return rep, kept, edges[:n_edges]


def reduce_tree(
    field: ScalarField, arcs: np.ndarray
) -> MapperGraph:
    """
    Collapse an augmented tree on the pixels of ``field``: contract arcs whose
    ends share a value, then drop degree-2 vertices.
    """
    values = field.flat
    rep, kept, edges = _contract_and_prune(
        np.ascontiguousarray(arcs, dtype=np.int64), values
    )
    pixels = np.flatnonzero(kept)
    counts = np.bincount(rep, minlength=field.size)
    node_of = {int(p): i for i, p in enumerate(pixels)}

    nodes = []
    for i, pixel in enumerate(pixels.tolist()):
        row, col = divmod(pixel, field.width)
        nodes.append(
            MapperNode(
                id=i,
                interval_index=0,
                pixel=pixel,
                count=int(counts[pixel]),
                mean=float(values[pixel]),
                cx=float(col),
                cy=float(row),
            )
        )
    return MapperGraph.build(
        nodes, [(node_of[a], node_of[b]) for a, b in edges.tolist()]
    )


def merge_tree_graph(field: ScalarField, tree: MergeTree) -> MapperGraph:
    """A sweep tree with equal-valued arcs contracted and regular vertices pruned."""
    return reduce_tree(field, tree.arcs)


def contour_arcs(join: MergeTree, split: MergeTree) -> np.ndarray:
    """Augmented contour tree arcs from a join and a split sweep of one field."""
    return _merge_trees(join.parent, join.children, split.parent, split.children)


def contour_tree(
    field: ScalarField, conn: Connectivity = Connectivity.FOUR
) -> MapperGraph:
    join = join_tree_sweep(field, conn)
    split = split_tree_sweep(field, conn)
    graph = reduce_tree(field, contour_arcs(join, split))
    logger.debug(
        "Contour tree of %dx%d field: %d nodes", field.width, field.height, graph.n_nodes
    )
    return graph
