from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property

import numpy as np

from app.errors import CoverParameterError, UnsupportedCoverStyleError


class CoverStyle(StrEnum):
    UNIFORM = "uniform"
    CONTOUR = "contour"
    JOIN = "join"
    SPLIT = "split"

    @property
    def nested(self) -> bool:
        return self in (CoverStyle.JOIN, CoverStyle.SPLIT)


class Parity(StrEnum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi)."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise CoverParameterError(
                f"Interval needs lo < hi, got ({self.lo}, {self.hi})"
            )

    def __contains__(self, value: float) -> bool:
        return self.lo < value < self.hi

    def contains_interval(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: Interval) -> bool:
        return max(self.lo, other.lo) < min(self.hi, other.hi)


@dataclass(frozen=True)
class UniformGrid:
    """Slice layout of a uniform cover: boundaries origin + i * width."""

    origin: float
    width: float
    margin: float


@dataclass(frozen=True)
class Cover:
    intervals: tuple[Interval, ...]
    style: CoverStyle
    grid: UniformGrid | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.intervals)

    def __getitem__(self, index: int) -> Interval:
        return self.intervals[index]

    @cached_property
    def los(self) -> np.ndarray:
        return np.array([interval.lo for interval in self.intervals])

    @cached_property
    def his(self) -> np.ndarray:
        return np.array([interval.hi for interval in self.intervals])

    @cached_property
    def min_overlap(self) -> float | None:
        """Width of the narrowest overlap between consecutive intervals."""
        if self.style.nested or len(self.intervals) < 2:
            return None
        return float(np.min(self.his[:-1] - self.los[1:]))


@dataclass(frozen=True)
class CoverPart:
    """
    One parity class of a uniform or contour cover.

    ``indices`` are 0-based positions in the parent cover, so the odd part
    (U_1, U_3, ...) holds 0, 2, ... and the even part holds 1, 3, ...
    """

    parent: Cover
    parity: Parity
    indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)

    @cached_property
    def los(self) -> np.ndarray:
        return self.parent.los[list(self.indices)]

    @cached_property
    def his(self) -> np.ndarray:
        return self.parent.his[list(self.indices)]


def split_even_odd(cover: Cover) -> tuple[CoverPart, CoverPart]:
    if cover.style.nested:
        raise UnsupportedCoverStyleError(
            f"{cover.style} covers are handled by the nested pipeline"
        )

    positions = range(len(cover))
    even = CoverPart(cover, Parity.EVEN, tuple(i for i in positions if i % 2 == 1))
    odd = CoverPart(cover, Parity.ODD, tuple(i for i in positions if i % 2 == 0))
    return even, odd


def locate_many(part: CoverPart, values: np.ndarray) -> np.ndarray:
    """Parent-cover index of the part interval holding each value, -1 if none."""
    values = np.asarray(values, dtype=np.float64)
    result = np.full(values.shape, -1, dtype=np.int64)
    if not len(part):
        return result

    los, his = part.parent.los, part.parent.his
    grid = part.parent.grid
    if grid is not None:
        # arithmetic window around the slice holding the value
        parity = 0 if part.parity is Parity.ODD else 1
        base = np.floor((values - grid.origin) / grid.width).astype(np.int64)
        for offset in (-2, -1, 0, 1, 2):
            candidate = base + offset
            valid = (
                (candidate >= 0)
                & (candidate < len(los))
                & (candidate % 2 == parity)
                & (result < 0)
            )
            safe = np.where(valid, candidate, 0)
            hit = valid & (los[safe] < values) & (values < his[safe])
            result[hit] = candidate[hit]
        return result

    indices = np.asarray(part.indices, dtype=np.int64)
    slot = np.searchsorted(part.los, values, side="left") - 1
    valid = slot >= 0
    safe = np.where(valid, slot, 0)
    hit = valid & (values < part.his[safe])
    result[hit] = indices[safe[hit]]
    return result


def locate(part: CoverPart, value: float) -> int | None:
    index = int(locate_many(part, np.array([value]))[0])
    return None if index < 0 else index


def refines(fine: Cover, coarse: Cover) -> bool:
    return all(
        any(big.contains_interval(small) for big in coarse.intervals)
        for small in fine.intervals
    )


def assignment(fine: Cover, coarse: Cover) -> list[int | None]:
    """For each fine interval, the first coarse interval that contains it."""
    result = []
    for small in fine.intervals:
        result.append(
            next(
                (i for i, big in enumerate(coarse.intervals) if big.contains_interval(small)),
                None,
            )
        )
    return result


def validate_cover(cover: Cover) -> Cover:
    intervals = cover.intervals
    if not intervals:
        raise CoverParameterError("Cover has no intervals")

    if cover.style is CoverStyle.JOIN:
        if any(i.lo != intervals[0].lo for i in intervals) or any(
            a.hi >= b.hi for a, b in zip(intervals, intervals[1:])
        ):
            raise CoverParameterError("Join cover must share lo and grow by hi")
    elif cover.style is CoverStyle.SPLIT:
        if any(i.hi != intervals[0].hi for i in intervals) or any(
            a.lo <= b.lo for a, b in zip(intervals, intervals[1:])
        ):
            raise CoverParameterError("Split cover must share hi and grow by lo")
    else:
        for i, current in enumerate(intervals):
            for j in range(i + 1, len(intervals)):
                adjacent = j == i + 1
                if current.intersects(intervals[j]) != adjacent:
                    raise CoverParameterError(
                        f"Intervals {i} and {j} break the adjacent-overlap rule"
                    )
    return cover

