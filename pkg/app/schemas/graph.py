from __future__ import annotations

from pydantic import BaseModel, field_validator


class NodePayload(BaseModel):
    id: int
    interval: int
    pixel: int
    count: int
    mean: float
    cx: float
    cy: float

    @field_validator("count", mode="before")
    @classmethod
    def validate_count(cls, value):
        if isinstance(value, int) and value < 1:
            raise ValueError("count must be positive")
        return value


class GraphPayload(BaseModel):
    """
    Serialized Mapper graph: {"nodes": [...], "edges": [[id, id], ...]}.
    ``weights`` is present only for simplified graphs.
    """

    nodes: list[NodePayload] = []
    edges: list[tuple[int, int]] = []
    weights: list[int] | None = None


class GraphSummary(GraphPayload):
    cycle_rank: int
    is_tree: bool
    components: int
