from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import Sequence

import numpy as np

from app.errors import BoundsError, DimensionError, FieldDataError


class Connectivity(StrEnum):
    FOUR = "four"
    EIGHT = "eight"

    @property
    def eight(self) -> bool:
        return self is Connectivity.EIGHT


# (drow, dcol) in neighbour order: up, left, right, down, then diagonals
FOUR_OFFSETS: tuple[tuple[int, int], ...] = ((-1, 0), (0, -1), (0, 1), (1, 0))
EIGHT_OFFSETS: tuple[tuple[int, int], ...] = FOUR_OFFSETS + (
    (-1, -1),
    (-1, 1),
    (1, -1),
    (1, 1),
)


@dataclass(frozen=True, eq=False)
class ScalarField:
    """
    Height function sampled on a width x height pixel grid.

    ``values`` is a read-only float64 array of shape (height, width);
    linear pixel index p maps to row p // width, column p % width.
    """

    width: int
    height: int
    values: np.ndarray

    @property
    def size(self) -> int:
        return self.width * self.height

    @property
    def flat(self) -> np.ndarray:
        return self.values.reshape(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScalarField):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None


def from_values(
    width: int, height: int, values: Sequence[float] | np.ndarray
) -> ScalarField:
    if width < 1 or height < 1:
        raise DimensionError(f"Field must be at least 1x1, got {width}x{height}")

    data = np.array(values, dtype=np.float64).reshape(-1)
    if data.size != width * height:
        raise DimensionError(
            f"Expected {width * height} values for a {width}x{height} field, "
            f"got {data.size}"
        )

    bad = np.flatnonzero(~np.isfinite(data))
    if bad.size:
        raise FieldDataError(
            f"Non-finite value {data[bad[0]]} at pixel {int(bad[0])}"
        )

    data = data.reshape(height, width)
    data.setflags(write=False)
    return ScalarField(width=width, height=height, values=data)


def value_range(field: ScalarField) -> tuple[float, float]:
    return float(field.values.min()), float(field.values.max())


def neighbors(field: ScalarField, index: int, conn: Connectivity) -> list[int]:
    if not 0 <= index < field.size:
        raise BoundsError(
            f"Pixel {index} outside a field of {field.size} pixels"
        )

    row, col = divmod(index, field.width)
    offsets = EIGHT_OFFSETS if Connectivity(conn).eight else FOUR_OFFSETS
    result = []
    for drow, dcol in offsets:
        r, c = row + drow, col + dcol
        if 0 <= r < field.height and 0 <= c < field.width:
            result.append(r * field.width + c)
    return result


def max_step(field: ScalarField, conn: Connectivity = Connectivity.FOUR) -> float:
    """Largest absolute value difference between two neighbouring pixels."""
    values = field.values
    steps = [values[:, 1:] - values[:, :-1], values[1:, :] - values[:-1, :]]
    if Connectivity(conn).eight:
        steps.append(values[1:, 1:] - values[:-1, :-1])
        steps.append(values[1:, :-1] - values[:-1, 1:])
    return max((float(np.abs(step).max()) for step in steps if step.size), default=0.0)
