from __future__ import annotations

import logging

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

import numpy as np

from app.config import settings
from app.cover.intervals import Cover, split_even_odd
from app.errors import CoverMismatchError
from app.field.scalar_field import Connectivity, ScalarField, max_step
from app.graph.model import MapperGraph, MapperNode
from app.mapper.edges import find_edges
from app.mapper.labeling import (
    LabelMap,
    find_candidates,
    label_pixels,
    threshold_labels,
)
from app.mapper.regions import RegionMap, find_regions

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def _run(fn: Callable[[T], R], items: Iterable[T], threads: int) -> list[R]:
    items = list(items)
    if threads > 0 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _split_regions(
    field: ScalarField, cover: Cover, conn: Connectivity, threads: int
) -> tuple[list[RegionMap], np.ndarray]:
    parts = split_even_odd(cover)
    label_maps = _run(lambda part: label_pixels(field, part), parts, threads)
    candidates = find_candidates(*label_maps)
    regions = _run(
        lambda label_map: find_regions(field, label_map, candidates, conn),
        label_maps,
        threads,
    )
    return regions, candidates


def _level_regions(
    field: ScalarField, cover: Cover, conn: Connectivity, threads: int
) -> list[RegionMap]:
    largest = cover.intervals[-1]
    values = field.flat
    outside = np.flatnonzero((values <= largest.lo) | (values >= largest.hi))
    if outside.size:
        pixel = int(outside[0])
        raise CoverMismatchError(
            f"Value {values[pixel]} at pixel {pixel} is not covered", pixel=pixel
        )

    def level(index: int) -> RegionMap:
        interval = cover.intervals[index]
        label_map: LabelMap = threshold_labels(field, interval.lo, interval.hi, index)
        return find_regions(field, label_map, find_candidates(label_map), conn)

    return _run(level, range(len(cover)), threads)


def _assemble_nodes(
    region_maps: list[RegionMap],
) -> tuple[list[MapperNode], list[dict[int, int]]]:
    """Number regions by (interval index, pixel); returns nodes and per-map id lookups."""
    keys = []
    for m, regions in enumerate(region_maps):
        for k in range(len(regions)):
            keys.append((int(regions.intervals[k]), int(regions.ids[k]), m, k))
    keys.sort()

    nodes = []
    lookup: list[dict[int, int]] = [{} for _ in region_maps]
    for node_id, (interval, pixel, m, k) in enumerate(keys):
        regions = region_maps[m]
        count = int(regions.counts[k])
        nodes.append(
            MapperNode(
                id=node_id,
                interval_index=interval,
                pixel=pixel,
                count=count,
                mean=float(regions.value_sums[k] / count),
                cx=float(regions.x_sums[k] / count),
                cy=float(regions.y_sums[k] / count),
            )
        )
        lookup[m][pixel] = node_id
    return nodes, lookup


def decompose(
    field: ScalarField,
    cover: Cover,
    conn: Connectivity = Connectivity.FOUR,
    *,
    threads: int | None = None,
) -> list[RegionMap]:
    """Region maps per cover part (even, odd) or per nested level."""
    threads = settings.MAPPER_THREADS if threads is None else threads
    conn = Connectivity(conn)
    if cover.style.nested:
        return _level_regions(field, cover, conn, threads)
    regions, _ = _split_regions(field, cover, conn, threads)
    return regions


def pixel_node_maps(
    field: ScalarField,
    cover: Cover,
    conn: Connectivity = Connectivity.FOUR,
    *,
    threads: int | None = None,
) -> list[np.ndarray]:
    """Per part or level, the node id of every pixel as numbered by build_mapper (-1 if none)."""
    region_maps = decompose(field, cover, conn, threads=threads)
    _, lookup = _assemble_nodes(region_maps)
    result = []
    for regions, ids in zip(region_maps, lookup):
        flat = regions.region_id.reshape(-1)
        table = np.array([ids[int(r)] for r in regions.ids], dtype=np.int64)
        nodes = np.full(flat.shape, -1, dtype=np.int64)
        present = flat >= 0
        nodes[present] = table[np.searchsorted(regions.ids, flat[present])]
        result.append(nodes)
    return result


def _check_resolution(field: ScalarField, cover: Cover, conn: Connectivity):
    overlap = cover.min_overlap
    if overlap is None:
        return
    step = max_step(field, conn)
    if overlap < step:
        logger.warning(
            "Narrowest overlap %.3g is below the largest neighbour step %.3g, "
            "regions may fragment",
            overlap,
            step,
        )


def build_mapper(
    field: ScalarField,
    cover: Cover,
    conn: Connectivity = Connectivity.FOUR,
    *,
    full_nerve: bool = False,
    threads: int | None = None,
) -> MapperGraph:
    threads = settings.MAPPER_THREADS if threads is None else threads
    conn = Connectivity(conn)

    if cover.style.nested:
        region_maps = _level_regions(field, cover, conn, threads)
        nodes, lookup = _assemble_nodes(region_maps)
        edges = _nested_edges(region_maps, lookup, full_nerve)
    else:
        _check_resolution(field, cover, conn)
        region_maps, candidates = _split_regions(field, cover, conn, threads)
        nodes, lookup = _assemble_nodes(region_maps)
        pairs = find_edges(region_maps[0], region_maps[1], candidates)
        edges = [(lookup[0][even], lookup[1][odd]) for even, odd in pairs]

    graph = MapperGraph.build(nodes, edges)
    logger.debug(
        "Mapper graph over %s cover of %d intervals: %d nodes, %d edges",
        cover.style,
        len(cover),
        graph.n_nodes,
        graph.n_edges,
    )
    return graph


def _nested_edges(
    region_maps: list[RegionMap], lookup: list[dict[int, int]], full_nerve: bool
) -> list[tuple[int, int]]:
    edges = []
    for level, regions in enumerate(region_maps):
        targets = range(level + 1, len(region_maps)) if full_nerve else (level + 1,)
        for upper in targets:
            if upper >= len(region_maps):
                continue
            containing = region_maps[upper].region_id.reshape(-1)[regions.ids]
            for pixel, owner in zip(regions.ids, containing):
                if owner >= 0:
                    edges.append((lookup[level][int(pixel)], lookup[upper][int(owner)]))
    return edges
