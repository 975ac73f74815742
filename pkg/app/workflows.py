from __future__ import annotations

import logging

from dataclasses import dataclass
from enum import StrEnum
from typing import Sequence

from app.config import settings
from app.cover import (
    Cover,
    contour_cover_for,
    critical_join_cover,
    critical_split_cover,
    refines,
    uniform_cover,
)
from app.ctree import (
    contour_tree,
    critical_values,
    join_tree_sweep,
    merge_tree_graph,
    split_tree_sweep,
    tree_critical_values,
)
from app.field import Connectivity, ScalarField, value_range
from app.graph import MapperGraph, is_tree, tree_isomorphic
from app.graph.embedding import check_embedding
from app.mapper import build_mapper, simplify

logger = logging.getLogger(__name__)


class TreeMode(StrEnum):
    CONTOUR = "contour"
    JOIN = "join"
    SPLIT = "split"


@dataclass(frozen=True)
class TreeComparison:
    mode: TreeMode
    cover: Cover
    mapper: MapperGraph
    reference: MapperGraph
    # None when the simplified Mapper graph is not a tree
    isomorphic: bool | None


@dataclass(frozen=True)
class ResolutionStep:
    slices: int
    cover: Cover
    graph: MapperGraph


@dataclass(frozen=True)
class EmbeddingCheck:
    coarse_slices: int
    fine_slices: int
    # None when the pair is not a refinement and the check was skipped
    mapping: dict[int, int] | None
    skipped: bool = False

    @property
    def passed(self) -> bool:
        return not self.skipped and self.mapping is not None


def realize_tree(
    field: ScalarField,
    mode: TreeMode,
    conn: Connectivity = Connectivity.FOUR,
    *,
    margin: float | None = None,
    full_nerve: bool = False,
) -> TreeComparison:
    """Mapper graph over a cover built from critical values, compared with the sweep-based tree."""
    mode = TreeMode(mode)
    margin = settings.CONTOUR_MARGIN if margin is None else margin

    match mode:
        case TreeMode.CONTOUR:
            cover = contour_cover_for(critical_values(field, conn), margin)
            reference = contour_tree(field, conn)
        case TreeMode.JOIN:
            tree = join_tree_sweep(field, conn)
            cover = critical_join_cover(tree_critical_values(tree))
            reference = merge_tree_graph(field, tree)
        case TreeMode.SPLIT:
            tree = split_tree_sweep(field, conn)
            cover = critical_split_cover(tree_critical_values(tree))
            reference = merge_tree_graph(field, tree)

    mapper = simplify(build_mapper(field, cover, conn, full_nerve=full_nerve))
    if is_tree(mapper):
        isomorphic = tree_isomorphic(mapper, reference)
    else:
        logger.warning(
            "%s Mapper graph is not a tree (%d nodes, %d edges)",
            mode,
            mapper.n_nodes,
            mapper.n_edges,
        )
        isomorphic = None

    return TreeComparison(
        mode=mode, cover=cover, mapper=mapper, reference=reference, isomorphic=isomorphic
    )


def run_multires(
    field: ScalarField,
    slices: Sequence[int],
    overlap: float,
    conn: Connectivity = Connectivity.FOUR,
) -> tuple[list[ResolutionStep], list[EmbeddingCheck]]:
    """One uniform-cover graph per slice count and an embedding check per consecutive pair."""
    span = value_range(field)
    steps = []
    for n in slices:
        cover = uniform_cover(span, n, overlap)
        steps.append(ResolutionStep(slices=n, cover=cover, graph=build_mapper(field, cover, conn)))

    checks = []
    for coarse, fine in zip(steps, steps[1:]):
        if not refines(fine.cover, coarse.cover):
            logger.warning(
                "%d slices do not refine %d slices, embedding check skipped",
                fine.slices,
                coarse.slices,
            )
            checks.append(EmbeddingCheck(coarse.slices, fine.slices, None, skipped=True))
            continue
        mapping = check_embedding(
            coarse.graph, fine.graph, coarse.cover, fine.cover, field, conn
        )
        checks.append(EmbeddingCheck(coarse.slices, fine.slices, mapping))
    return steps, checks
