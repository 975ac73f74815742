from __future__ import annotations

import logging

from typing import Iterable

import networkx as nx
import numpy as np

from networkx.algorithms import bipartite

from app.cover.intervals import Cover, assignment, refines
from app.errors import GraphParameterError
from app.field.scalar_field import Connectivity, ScalarField
from app.graph.model import MapperGraph
from app.mapper.pipeline import pixel_node_maps

logger = logging.getLogger(__name__)


def _incidence(coarse_maps: list[np.ndarray], fine_maps: list[np.ndarray]) -> np.ndarray:
    """Unique (coarse node, fine node) pairs sharing at least one pixel."""
    pairs = []
    for coarse in coarse_maps:
        for fine in fine_maps:
            both = (coarse >= 0) & (fine >= 0)
            pairs.append(np.stack([coarse[both], fine[both]], axis=1))
    stacked = np.concatenate(pairs) if pairs else np.empty((0, 2), dtype=np.int64)
    return np.unique(stacked, axis=0)


def _check_numbering(graph: MapperGraph, maps: list[np.ndarray], label: str):
    present = set(np.unique(np.concatenate(maps)).tolist()) - {-1}
    if present != {node.id for node in graph.nodes}:
        raise GraphParameterError(
            f"The {label} graph was not built from this field and cover"
        )


def _interval_table(graph: MapperGraph) -> np.ndarray:
    table = np.full(max((n.id for n in graph.nodes), default=-1) + 1, -1, dtype=np.int64)
    for node in graph.nodes:
        table[node.id] = node.interval_index
    return table


def match_witnesses(preferences: Iterable[tuple[int, int]]) -> dict[int, int]:
    """
    Injective coarse -> fine witness map from (coarse node, fine node) pairs
    listed in order of preference per coarse node.

    Coarse nodes left unmatched by a maximum matching are absent from the result.
    """
    pairs = list(dict.fromkeys(preferences))
    coarse_nodes = sorted({c for c, _ in pairs})
    # fine ids live on the negative side of the bipartite graph
    graph = nx.Graph()
    graph.add_nodes_from(coarse_nodes)
    graph.add_edges_from((c, -1 - f) for c, f in pairs)
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=coarse_nodes)
    return {c: -1 - matching[c] for c in coarse_nodes if c in matching}


def _witnesses(
    coarse: MapperGraph,
    coarse_cover: Cover,
    coarse_maps: list[np.ndarray],
    fine: MapperGraph,
    fine_maps: list[np.ndarray],
    rho: np.ndarray,
    values: np.ndarray,
) -> dict[int, int]:
    coarse_interval = _interval_table(coarse)
    fine_interval = _interval_table(fine)
    centers = (coarse_cover.los + coarse_cover.his) / 2.0

    columns = []
    for coarse_map in coarse_maps:
        for fine_map in fine_maps:
            pixels = np.flatnonzero((coarse_map >= 0) & (fine_map >= 0))
            c_nodes, f_nodes = coarse_map[pixels], fine_map[pixels]
            c_intervals = coarse_interval[c_nodes]
            unassigned = rho[fine_interval[f_nodes]] != c_intervals
            distance = np.abs(values[pixels] - centers[c_intervals])
            columns.append((c_nodes, unassigned, distance, pixels, f_nodes))
    if not columns:
        return {}

    c_nodes, unassigned, distance, pixels, f_nodes = (
        np.concatenate(parts) for parts in zip(*columns)
    )
    # per coarse node: assigned fine intervals first, then closest to the interval center
    order = np.lexsort((f_nodes, pixels, distance, unassigned, c_nodes))
    return match_witnesses(zip(c_nodes[order].tolist(), f_nodes[order].tolist()))


def check_embedding(
    coarse: MapperGraph,
    fine: MapperGraph,
    coarse_cover: Cover,
    fine_cover: Cover,
    field: ScalarField,
    conn: Connectivity = Connectivity.FOUR,
) -> dict[int, int] | None:
    """
    Map each coarse node to a fine node inside its region and verify the map
    is injective and sends every coarse edge to a fine path through nodes
    touching the edge's two regions. Returns the node map or None.
    """
    if not refines(fine_cover, coarse_cover):
        raise GraphParameterError("The fine cover does not refine the coarse cover")

    coarse_maps = pixel_node_maps(field, coarse_cover, conn)
    fine_maps = pixel_node_maps(field, fine_cover, conn)
    _check_numbering(coarse, coarse_maps, "coarse")
    _check_numbering(fine, fine_maps, "fine")

    rho = np.array([-1 if r is None else r for r in assignment(fine_cover, coarse_cover)])
    mapping = _witnesses(
        coarse, coarse_cover, coarse_maps, fine, fine_maps, rho, field.flat
    )
    if len(mapping) != coarse.n_nodes:
        logger.debug(
            "No injective witness for %d coarse nodes", coarse.n_nodes - len(mapping)
        )
        return None

    touching: dict[int, set[int]] = {}
    for c, f in _incidence(coarse_maps, fine_maps).tolist():
        touching.setdefault(c, set()).add(f)

    fine_graph = nx.Graph(fine.edges)
    fine_graph.add_nodes_from(node.id for node in fine.nodes)
    for u, v in coarse.edges:
        allowed = fine_graph.subgraph(touching[u] | touching[v])
        if not nx.has_path(allowed, mapping[u], mapping[v]):
            logger.debug("Coarse edge (%d, %d) has no fine path", u, v)
            return None
    return mapping
