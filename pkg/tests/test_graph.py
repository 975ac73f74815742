import json

import pytest

from app.cover import uniform_cover
from app.errors import GraphFormatError, GraphParameterError
from app.field import value_range
from app.graph import (
    MapperGraph,
    MapperNode,
    component_count,
    cycle_rank,
    degrees,
    from_json,
    is_tree,
    leaf_count,
    summarize,
    to_dot,
    to_json,
    tree_centers,
    tree_isomorphic,
)
from app.graph.embedding import check_embedding, match_witnesses
from app.mapper import build_mapper, simplify


def path(make_graph, n):
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def test_graph_rejects_dangling_edge():
    node = MapperNode(id=0, interval_index=0, pixel=0, count=1, mean=0.0, cx=0.0, cy=0.0)
    with pytest.raises(GraphParameterError):
        MapperGraph(nodes=(node,), edges=((0, 1),))


def test_graph_rejects_duplicate_ids():
    node = MapperNode(id=0, interval_index=0, pixel=0, count=1, mean=0.0, cx=0.0, cy=0.0)
    with pytest.raises(GraphParameterError):
        MapperGraph(nodes=(node, node))


def test_build_canonicalizes_edges(make_graph):
    graph = make_graph(3, [(2, 1), (1, 0)])
    assert graph.edges == ((0, 1), (1, 2))


def test_cycle_rank(make_graph):
    assert cycle_rank(path(make_graph, 3)) == 0
    assert cycle_rank(make_graph(3, [(0, 1), (1, 2), (0, 2)])) == 1

    forest = make_graph(4, [(0, 1), (2, 3)])
    assert component_count(forest) == 2
    assert cycle_rank(forest) == 0


def test_is_tree(make_graph):
    assert is_tree(make_graph(1, []))
    assert is_tree(path(make_graph, 4))
    assert not is_tree(make_graph(4, [(0, 1), (2, 3)]))
    assert not is_tree(make_graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert not is_tree(MapperGraph())


def test_degrees_and_leaves(make_graph):
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert degrees(star) == {0: 3, 1: 1, 2: 1, 3: 1}
    assert leaf_count(star) == 3


def test_tree_centers(make_graph):
    assert tree_centers(path(make_graph, 5)) == [2]
    assert tree_centers(path(make_graph, 4)) == [1, 2]
    assert tree_centers(make_graph(1, [])) == [0]


def test_tree_centers_rejects_cycles(make_graph):
    with pytest.raises(GraphParameterError):
        tree_centers(make_graph(3, [(0, 1), (1, 2), (0, 2)]))


def test_tree_isomorphic(make_graph):
    assert tree_isomorphic(path(make_graph, 3), make_graph(3, [(1, 0), (0, 2)]))
    assert not tree_isomorphic(path(make_graph, 4), make_graph(4, [(0, 1), (0, 2), (0, 3)]))
    assert not tree_isomorphic(path(make_graph, 4), path(make_graph, 5))


def test_tree_isomorphic_ignores_labels(make_graph):
    # spider with legs 1, 2, 2 under two different numberings
    first = make_graph(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)])
    second = make_graph(6, [(5, 4), (5, 3), (3, 2), (5, 1), (1, 0)])
    other = make_graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])

    assert tree_isomorphic(first, second)
    assert not tree_isomorphic(first, other)


def test_tree_isomorphic_rejects_cycles(make_graph):
    with pytest.raises(GraphParameterError):
        tree_isomorphic(make_graph(3, [(0, 1), (1, 2), (0, 2)]), path(make_graph, 3))


def test_empty_graph_json():
    assert json.loads(to_json(MapperGraph())) == {"nodes": [], "edges": []}


def test_json_roundtrip(two_peaks_64):
    graph = build_mapper(two_peaks_64, uniform_cover(value_range(two_peaks_64), 8, 0.25))
    assert from_json(to_json(graph)) == graph

    simplified = simplify(graph)
    assert "weights" in json.loads(to_json(simplified))
    assert from_json(to_json(simplified)) == simplified


@pytest.mark.parametrize(
    "text",
    [
        "[1, 2",
        '{"nodes": [], "edges": [[0, 1]]}',
        '{"nodes": [{"id": 0, "interval": 0, "pixel": 0, "count": 0,'
        ' "mean": 0, "cx": 0, "cy": 0}], "edges": []}',
    ],
)
def test_from_json_rejects(text):
    with pytest.raises(GraphFormatError):
        from_json(text)


def test_dot_single_edge(make_graph):
    dot = to_dot(make_graph(2, [(0, 1)]))

    assert dot.startswith("graph mapper {")
    assert dot.count("--") == 1
    assert "0 -- 1" in dot


def test_dot_labels_weighted_edges(make_graph):
    dot = to_dot(simplify(path(make_graph, 3)))
    assert 'label=1' in dot


def test_summarize(make_graph):
    summary = summarize(make_graph(3, [(0, 1), (1, 2), (0, 2)]))

    assert summary.cycle_rank == 1
    assert summary.components == 1
    assert not summary.is_tree
    assert len(summary.nodes) == 3


@pytest.mark.parametrize("coarse_n, fine_n", [(2, 4), (4, 8), (8, 16)])
@pytest.mark.parametrize("fixture", ["two_peaks_128", "saddle_128"])
def test_embedding_between_dyadic_covers(request, fixture, coarse_n, fine_n):
    field = request.getfixturevalue(fixture)
    span = value_range(field)
    coarse_cover = uniform_cover(span, coarse_n, 0.25)
    fine_cover = uniform_cover(span, fine_n, 0.25)
    coarse = build_mapper(field, coarse_cover)
    fine = build_mapper(field, fine_cover)

    mapping = check_embedding(coarse, fine, coarse_cover, fine_cover, field)

    assert mapping is not None
    assert set(mapping) == {node.id for node in coarse.nodes}
    assert len(set(mapping.values())) == len(mapping)


def test_embedding_into_itself(two_peaks_64):
    cover = uniform_cover(value_range(two_peaks_64), 4, 0.25)
    graph = build_mapper(two_peaks_64, cover)

    mapping = check_embedding(graph, graph, cover, cover, two_peaks_64)

    assert mapping == {node.id: node.id for node in graph.nodes}


def test_match_witnesses_resolves_shared_choice():
    # both coarse nodes list fine node 10 first
    assert match_witnesses([(0, 10), (0, 11), (1, 10)]) == {0: 11, 1: 10}


def test_match_witnesses_keeps_distinct_first_choices():
    assert match_witnesses([(0, 5), (0, 6), (1, 6), (1, 5), (0, 5)]) == {0: 5, 1: 6}


def test_match_witnesses_leaves_unmatched_nodes_out():
    assert len(match_witnesses([(0, 5), (1, 5)])) == 1
    assert match_witnesses([]) == {}


def test_embedding_requires_refinement(two_peaks_64):
    span = value_range(two_peaks_64)
    coarse_cover = uniform_cover(span, 4, 0.25)
    fine_cover = uniform_cover(span, 3, 0.25)

    with pytest.raises(GraphParameterError):
        check_embedding(
            build_mapper(two_peaks_64, coarse_cover),
            build_mapper(two_peaks_64, fine_cover),
            coarse_cover,
            fine_cover,
            two_peaks_64,
        )


def test_embedding_rejects_foreign_graph(two_peaks_64, make_graph):
    span = value_range(two_peaks_64)
    coarse_cover = uniform_cover(span, 2, 0.25)
    fine_cover = uniform_cover(span, 4, 0.25)

    with pytest.raises(GraphParameterError):
        check_embedding(
            make_graph(1, []),
            build_mapper(two_peaks_64, fine_cover),
            coarse_cover,
            fine_cover,
            two_peaks_64,
        )
