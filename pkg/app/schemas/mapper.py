from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, field_validator, model_validator

from app.config import settings
from app.schemas.graph import GraphSummary


class FieldSource(BaseModel):
    """
    Either inline ``values`` (rows of equal length) or a synthetic ``pattern``.
    """

    values: list[list[float]] | None = None
    pattern: Literal[
        "perlin", "saddle", "two_peaks", "ring_gradient",
        "bench1", "bench2", "bench3", "bench4",
    ] | None = None
    size: int = 128
    seed: int = 0
    connectivity: Literal["four", "eight"] = settings.CONNECTIVITY

    @field_validator("values", mode="before")
    @classmethod
    def validate_values(cls, value):
        if value is None:
            return value
        if not isinstance(value, list) or not value:
            raise ValueError("values must be a non-empty list of rows")
        widths = {len(row) if isinstance(row, list) else -1 for row in value}
        if len(widths) != 1 or widths == {0} or widths == {-1}:
            raise ValueError("values rows must be non-empty lists of equal length")
        return value

    @field_validator("size", mode="before")
    @classmethod
    def validate_size(cls, value):
        if isinstance(value, int) and not 2 <= value <= settings.MAX_SIZE:
            raise ValueError(f"size must be between 2 and {settings.MAX_SIZE}")
        return value

    @model_validator(mode="after")
    def validate_source(self):
        if (self.values is None) == (self.pattern is None):
            raise ValueError("give exactly one of values or pattern")
        return self


class ComputeRequest(FieldSource):
    mode: Literal["uniform", "contour", "join", "split"] = "uniform"
    slices: int = settings.DEFAULT_SLICES
    overlap: float = settings.DEFAULT_OVERLAP
    margin: float = settings.CONTOUR_MARGIN
    simplify: bool = False
    full_nerve: bool = False

    @field_validator("slices", mode="before")
    @classmethod
    def validate_slices(cls, value):
        if isinstance(value, int) and value < 1:
            raise ValueError("slices must be positive")
        return value


class TreeRequest(FieldSource):
    mode: Literal["contour", "join", "split"] = "contour"
    margin: float = settings.CONTOUR_MARGIN
    full_nerve: bool = False


class BenchRequest(BaseModel):
    sizes: list[int] = settings.BENCH_SIZES_EFFECTIVE
    slices: list[int] = settings.BENCH_SLICES
    repeats: int = settings.BENCH_REPEATS
    patterns: list[Literal["bench1", "bench2", "bench3", "bench4"]] = [
        "bench1", "bench2", "bench3", "bench4",
    ]
    with_ctree: bool = True

    @field_validator("sizes", mode="before")
    @classmethod
    def validate_sizes(cls, value):
        if isinstance(value, list):
            for size in value:
                if isinstance(size, int) and not 2 <= size <= settings.MAX_SIZE:
                    raise ValueError(f"sizes must be between 2 and {settings.MAX_SIZE}")
        return value

    @field_validator("repeats", mode="before")
    @classmethod
    def validate_repeats(cls, value):
        if isinstance(value, int) and value < 1:
            raise ValueError("repeats must be positive")
        return value


class TreeResult(BaseModel):
    mode: str
    # null when the simplified Mapper graph is not a tree
    isomorphic: bool | None
    mapper: GraphSummary
    reference: GraphSummary
