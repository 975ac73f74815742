from __future__ import annotations

from fastapi import APIRouter, Depends

from app.config import Settings
from app.cover import (
    contour_cover_for,
    cover_payload,
    join_cover,
    split_cover,
    uniform_cover,
)
from app.ctree import critical_values
from app.dependencies import get_settings
from app.field import (
    Connectivity,
    PatternKind,
    ScalarField,
    from_values,
    generate_pattern,
    value_range,
)
from app.graph import summarize
from app.mapper import build_mapper, simplify
from app.responses.base import BaseResponse
from app.schemas.mapper import (
    BenchRequest,
    ComputeRequest,
    FieldSource,
    TreeRequest,
    TreeResult,
)
from app.workers.bench import run_benchmark_task
from app.workflows import TreeMode, realize_tree

router = APIRouter(prefix="/mapper", tags=["Mapper"])


def _field(source: FieldSource) -> ScalarField:
    if source.values is not None:
        rows = source.values
        return from_values(len(rows[0]), len(rows), rows)
    return generate_pattern(PatternKind(source.pattern), source.size, source.seed)


@router.get("/patterns")
def patterns():
    return BaseResponse(ok=True, data=[kind.value for kind in PatternKind])


@router.post("/compute")
def compute(
    payload: ComputeRequest,
    settings: Settings = Depends(get_settings),
):
    field = _field(payload)
    conn = Connectivity(payload.connectivity)
    span = value_range(field)

    match payload.mode:
        case "uniform":
            cover = uniform_cover(span, payload.slices, payload.overlap)
        case "contour":
            cover = contour_cover_for(critical_values(field, conn), payload.margin)
        case "join":
            cover = join_cover(span, payload.slices)
        case "split":
            cover = split_cover(span, payload.slices)

    graph = build_mapper(
        field,
        cover,
        conn,
        full_nerve=payload.full_nerve,
        threads=settings.MAPPER_THREADS,
    )
    if payload.simplify:
        graph = simplify(graph)

    return BaseResponse(
        ok=True,
        data={"cover": cover_payload(cover), "graph": summarize(graph)},
    )


@router.post("/tree")
def tree(payload: TreeRequest):
    field = _field(payload)
    result = realize_tree(
        field,
        TreeMode(payload.mode),
        Connectivity(payload.connectivity),
        margin=payload.margin,
        full_nerve=payload.full_nerve,
    )
    return BaseResponse(
        ok=True,
        data=TreeResult(
            mode=result.mode.value,
            isomorphic=result.isomorphic,
            mapper=summarize(result.mapper),
            reference=summarize(result.reference),
        ),
    )


@router.post("/bench")
def bench(payload: BenchRequest):
    task = run_benchmark_task.delay(
        payload.sizes,
        payload.slices,
        payload.repeats,
        list(payload.patterns),
        payload.with_ctree,
    )
    return BaseResponse(ok=True, data={"task_id": task.id})
