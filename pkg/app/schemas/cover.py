from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, field_validator


class CoverPayload(BaseModel):
    """
    Serialized cover: {"style": ..., "intervals": [[lo, hi], ...]}.
    """

    style: Literal["uniform", "contour", "join", "split"]
    intervals: list[tuple[float, float]]

    @field_validator("intervals", mode="before")
    @classmethod
    def validate_intervals(cls, value):
        if not isinstance(value, list) or not value:
            raise ValueError("intervals must be a non-empty list")
        for pair in value:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ValueError("each interval must be a [lo, hi] pair")
        return value
