from functools import lru_cache

import networkx as nx
import numpy as np
import pytest

from app.ctree import (
    NodeKind,
    SweepDirection,
    contour_arcs,
    contour_tree,
    critical_values,
    join_tree_sweep,
    merge_tree_graph,
    split_tree_sweep,
    tree_critical_values,
)
from app.field import Connectivity, from_values, generate_pattern
from app.graph import degrees, is_tree, leaf_count


@lru_cache
def pixel_grid(height, width, conn):
    grid = nx.grid_2d_graph(height, width)
    if conn is Connectivity.EIGHT:
        for r in range(height - 1):
            for c in range(width - 1):
                grid.add_edge((r, c), (r + 1, c + 1))
                grid.add_edge((r, c + 1), (r + 1, c))
    return grid


def level_set_components(field, threshold, conn, below=True):
    keep = field.values <= threshold if below else field.values >= threshold
    grid = pixel_grid(field.height, field.width, conn)
    return nx.number_connected_components(grid.subgraph(zip(*np.nonzero(keep))))


def test_join_sweep_humps(hump_field):
    tree = join_tree_sweep(hump_field)

    assert tree.direction is SweepDirection.JOIN
    assert sorted(tree.leaves.tolist()) == [0, 2, 4]
    assert sorted(tree.merges.tolist()) == [1, 3]
    assert tree.root == 3
    assert tree.parent.tolist() == [1, 3, 1, -1, 3]


def test_split_sweep_humps(hump_field):
    tree = split_tree_sweep(hump_field)

    assert tree.direction is SweepDirection.SPLIT
    assert sorted(tree.leaves.tolist()) == [1, 3]
    assert tree.merges.tolist() == [2]
    assert tree.values[tree.root] == 0.0


def test_sweep_ramp_has_one_leaf():
    ramp = from_values(5, 1, [0, 1, 2, 3, 4])
    tree = join_tree_sweep(ramp)

    assert tree.leaves.tolist() == [0]
    assert tree.merges.size == 0
    assert tree.kinds[4] == NodeKind.ROOT
    assert tree.kinds[2] == NodeKind.REGULAR


def test_sweep_constant_field(constant_field):
    for conn in Connectivity:
        tree = join_tree_sweep(constant_field, conn)
        assert tree.leaves.tolist() == [0]
        assert tree.merges.size == 0


def test_branches_alive_humps(hump_field):
    tree = join_tree_sweep(hump_field)
    assert [tree.branches_alive(t) for t in (0.5, 1.5, 2.5, 3.0)] == [2, 3, 2, 1]


@pytest.mark.parametrize("conn", list(Connectivity))
def test_branches_alive_matches_level_sets(conn):
    rng = np.random.default_rng(7)
    thresholds = np.linspace(0.05, 0.95, 20)

    for _ in range(200):
        field = from_values(16, 16, rng.uniform(0.0, 1.0, 256))
        join = join_tree_sweep(field, conn)
        split = split_tree_sweep(field, conn)

        for threshold in thresholds:
            assert join.branches_alive(threshold) == level_set_components(
                field, threshold, conn
            )
            assert split.branches_alive(threshold) == level_set_components(
                field, threshold, conn, below=False
            )


@pytest.mark.parametrize("conn", list(Connectivity))
def test_branches_alive_on_perlin(conn):
    field = generate_pattern("perlin", 32, seed=5)
    join = join_tree_sweep(field, conn)

    for threshold in np.linspace(0.05, 0.95, 10):
        assert join.branches_alive(threshold) == level_set_components(field, threshold, conn)


def test_merge_tree_graph_humps(hump_field):
    graph = merge_tree_graph(hump_field, join_tree_sweep(hump_field))

    assert is_tree(graph)
    assert graph.n_nodes == 4
    assert leaf_count(graph) == 3
    assert sorted(node.mean for node in graph.nodes) == [0.0, 0.0, 1.0, 2.0]


def test_contour_arcs_span_every_pixel(two_peaks_64):
    arcs = contour_arcs(join_tree_sweep(two_peaks_64), split_tree_sweep(two_peaks_64))
    assert arcs.shape == (two_peaks_64.size - 1, 2)


def test_contour_tree_constant_field(constant_field):
    graph = contour_tree(constant_field)
    assert graph.n_nodes == 1
    assert graph.n_edges == 0
    assert graph.nodes[0].count == 16


def test_contour_tree_peak(peak3):
    graph = contour_tree(peak3)

    assert graph.n_nodes == 6
    assert sorted(degrees(graph).values()) == [1, 1, 1, 1, 1, 5]


def test_contour_tree_humps(hump_field):
    # level sets of a 1D field are points: the tree is the path itself
    graph = contour_tree(hump_field)

    assert is_tree(graph)
    assert graph.n_nodes == 2
    assert sorted(node.pixel for node in graph.nodes) == [0, 4]


def test_contour_tree_two_peaks(two_peaks_64):
    graph = contour_tree(two_peaks_64)

    assert is_tree(graph)
    assert graph.n_nodes == 10
    assert leaf_count(graph) == 6


def test_contour_tree_saddle(saddle_64):
    graph = contour_tree(saddle_64)

    assert graph.n_nodes == 5
    assert sorted(degrees(graph).values()) == [1, 1, 1, 1, 4]


def test_critical_values_humps(hump_field):
    assert critical_values(hump_field).tolist() == [0.0, 1.0, 2.0, 3.0]
    assert tree_critical_values(join_tree_sweep(hump_field)).tolist() == [0.0, 1.0, 2.0, 3.0]


def test_critical_values_ramp():
    ramp = from_values(5, 1, [0, 1, 2, 3, 4])
    assert critical_values(ramp).tolist() == [0.0, 4.0]


def test_critical_values_saddle(saddle_64):
    assert critical_values(saddle_64).tolist() == pytest.approx([0.0, 0.5, 1.0])
