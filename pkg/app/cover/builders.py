from __future__ import annotations

import logging

from typing import Sequence

import numpy as np

from app.cover.intervals import Cover, CoverStyle, Interval, UniformGrid
from app.errors import CoverParameterError

logger = logging.getLogger(__name__)

# positions of a, d, c, b inside each gap between consecutive critical values
CONTOUR_QUANTILES = (0.2, 0.4, 0.6, 0.8)


def expand_range(value_range: tuple[float, float]) -> tuple[float, float]:
    lo, hi = float(value_range[0]), float(value_range[1])
    if hi < lo:
        raise CoverParameterError(f"Invalid range ({lo}, {hi})")
    if lo == hi:
        return lo - 0.5, hi + 0.5
    return lo, hi


def uniform_cover(
    value_range: tuple[float, float], n_slices: int, overlap: float
) -> Cover:
    if n_slices < 1:
        raise CoverParameterError(f"n_slices must be positive, got {n_slices}")
    if not 0.0 < overlap < 0.5:
        raise CoverParameterError(f"Overlap must lie in (0, 0.5), got {overlap}")

    a, b = expand_range(value_range)
    width = (b - a) / n_slices
    margin = overlap * width
    boundaries = a + np.arange(n_slices + 1) * width
    intervals = tuple(
        Interval(float(lo), float(hi))
        for lo, hi in zip(boundaries[:-1] - margin, boundaries[1:] + margin)
    )
    return Cover(
        intervals=intervals,
        style=CoverStyle.UNIFORM,
        grid=UniformGrid(origin=a, width=width, margin=margin),
    )


def contour_cover(critical_values: Sequence[float], margin: float) -> Cover:
    """
    Cover realizing the contour tree for ascending critical values t_1..t_n.

    Each gap gets four interior points a < d < c < b; the result interleaves
    (c_{i-1}, d_i) around every t_i with (a_i, b_i) inside every gap.
    """
    t = np.asarray(critical_values, dtype=np.float64)
    if t.size < 2:
        raise CoverParameterError("Need at least two critical values")
    if np.any(np.diff(t) <= 0):
        raise CoverParameterError("Critical values must be strictly ascending")
    if not margin > 0:
        raise CoverParameterError(f"Margin must be positive, got {margin}")

    gaps = np.diff(t)
    qa, qd, qc, qb = (t[:-1] + q * gaps for q in CONTOUR_QUANTILES)
    starts = np.concatenate([[t[0] - margin], qc])
    ends = np.concatenate([qd, [t[-1] + margin]])

    intervals = []
    for i in range(t.size):
        intervals.append(Interval(float(starts[i]), float(ends[i])))
        if i < t.size - 1:
            intervals.append(Interval(float(qa[i]), float(qb[i])))
    return Cover(intervals=tuple(intervals), style=CoverStyle.CONTOUR)


def _levels(a: float, b: float, n_levels: int) -> np.ndarray:
    if n_levels < 1:
        raise CoverParameterError(f"n_levels must be positive, got {n_levels}")
    return a + np.arange(n_levels + 1) * ((b - a) / n_levels)


def join_cover(value_range: tuple[float, float], n_levels: int) -> Cover:
    a, b = expand_range(value_range)
    thresholds = _levels(a, b, n_levels)[1:]
    thresholds[-1] = np.nextafter(b, np.inf)
    return join_cover_at(thresholds, (a, b))


def split_cover(value_range: tuple[float, float], n_levels: int) -> Cover:
    a, b = expand_range(value_range)
    thresholds = _levels(a, b, n_levels)[:-1][::-1].copy()
    thresholds[-1] = np.nextafter(a, -np.inf)
    return split_cover_at(thresholds, (a, b))


def join_cover_at(
    thresholds: Sequence[float], value_range: tuple[float, float]
) -> Cover:
    """Nested sublevel cover (a - 1, t) for ascending thresholds."""
    a, _ = expand_range(value_range)
    return Cover(
        intervals=tuple(Interval(a - 1.0, float(t)) for t in thresholds),
        style=CoverStyle.JOIN,
    )


def split_cover_at(
    thresholds: Sequence[float], value_range: tuple[float, float]
) -> Cover:
    """Nested superlevel cover (t, b + 1) for descending thresholds."""
    _, b = expand_range(value_range)
    return Cover(
        intervals=tuple(Interval(float(t), b + 1.0) for t in thresholds),
        style=CoverStyle.SPLIT,
    )


def critical_join_cover(critical_values: Sequence[float]) -> Cover:
    """Join cover with one level between each pair of consecutive critical values."""
    t = np.unique(np.asarray(critical_values, dtype=np.float64))
    if not t.size:
        raise CoverParameterError("Need at least one critical value")
    thresholds = np.append((t[:-1] + t[1:]) / 2.0, np.nextafter(t[-1], np.inf))
    return join_cover_at(thresholds, (t[0], t[-1]))


def critical_split_cover(critical_values: Sequence[float]) -> Cover:
    t = np.unique(np.asarray(critical_values, dtype=np.float64))[::-1]
    if not t.size:
        raise CoverParameterError("Need at least one critical value")
    thresholds = np.append((t[:-1] + t[1:]) / 2.0, np.nextafter(t[-1], -np.inf))
    return split_cover_at(thresholds, (t[-1], t[0]))


def contour_cover_for(critical_values: Sequence[float], margin_fraction: float) -> Cover:
    """contour_cover with the margin scaled to the value span; constant fields get a unit span."""
    t = np.unique(np.asarray(critical_values, dtype=np.float64))
    if t.size == 1:
        logger.debug("Single critical value %s, widening to a unit span", t[0])
        t = np.array([t[0] - 0.5, t[0] + 0.5])
    return contour_cover(t, margin_fraction * float(t[-1] - t[0]))
