from __future__ import annotations

import logging

from enum import StrEnum

import numpy as np

from app.config import settings
from app.errors import DimensionError
from app.field.scalar_field import ScalarField, from_values

logger = logging.getLogger(__name__)


class PatternKind(StrEnum):
    PERLIN = "perlin"
    SADDLE = "saddle"
    TWO_PEAKS = "two_peaks"
    RING_GRADIENT = "ring_gradient"
    BENCH1 = "bench1"
    BENCH2 = "bench2"
    BENCH3 = "bench3"
    BENCH4 = "bench4"


BENCH_PATTERNS = (
    PatternKind.BENCH1,
    PatternKind.BENCH2,
    PatternKind.BENCH3,
    PatternKind.BENCH4,
)

# unit gradients of the 2D improved-noise lattice, indexed by hash & 7
_GRAD_X = np.array([1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 0.0, 0.0])
_GRAD_Y = np.array([1.0, 1.0, -1.0, -1.0, 0.0, 0.0, 1.0, -1.0])


def generate_pattern(
    kind: PatternKind, size: int, seed: int = 0, *, cell: int | None = None
) -> ScalarField:
    """
    Deterministic synthetic field of ``size`` x ``size`` pixels, normalized to [0,1].

    ``cell`` is the perlin lattice spacing in pixels (defaults to settings.PERLIN_CELL).
    """
    if size < 2:
        raise DimensionError(f"Pattern size must be at least 2, got {size}")

    kind = PatternKind(kind)
    match kind:
        case PatternKind.PERLIN | PatternKind.BENCH1:
            raw = _perlin(size, seed, cell or settings.PERLIN_CELL)
        case PatternKind.SADDLE:
            raw = _saddle(size)
        case PatternKind.TWO_PEAKS:
            raw = _two_peaks(size)
        case PatternKind.RING_GRADIENT:
            raw = _ring_gradient(size)
        case PatternKind.BENCH2:
            raw = _radial_rings(size)
        case PatternKind.BENCH3:
            raw = _bump_lattice(size, seed)
        case PatternKind.BENCH4:
            raw = _sine_plaid(size)

    logger.debug("Generated %s pattern %dx%d (seed %d)", kind, size, size, seed)
    return from_values(size, size, _normalize(raw))


def _normalize(raw: np.ndarray) -> np.ndarray:
    lo, hi = raw.min(), raw.max()
    if hi > lo:
        return (raw - lo) / (hi - lo)
    return np.zeros_like(raw)


def _pixel_centers(size: int) -> tuple[np.ndarray, np.ndarray]:
    centers = np.arange(size, dtype=np.float64) + 0.5
    return np.meshgrid(centers, centers)


def _fade(t: np.ndarray) -> np.ndarray:
    return t * t * t * (t * (t * 6.0 - 15.0) + 10.0)


def _grad(hashed: np.ndarray, dx: np.ndarray, dy: np.ndarray) -> np.ndarray:
    h = hashed & 7
    return _GRAD_X[h] * dx + _GRAD_Y[h] * dy


def _perlin(size: int, seed: int, cell: int) -> np.ndarray:
    perm = np.random.default_rng(seed).permutation(256)
    perm = np.concatenate([perm, perm])

    x, y = _pixel_centers(size)
    x, y = x / cell, y / cell
    x0, y0 = np.floor(x), np.floor(y)
    xi, yi = x0.astype(np.int64) & 255, y0.astype(np.int64) & 255
    xf, yf = x - x0, y - y0
    u, v = _fade(xf), _fade(yf)

    aa = perm[perm[xi] + yi]
    ab = perm[perm[xi] + yi + 1]
    ba = perm[perm[xi + 1] + yi]
    bb = perm[perm[xi + 1] + yi + 1]

    bottom = _grad(aa, xf, yf) + u * (_grad(ba, xf - 1, yf) - _grad(aa, xf, yf))
    top = _grad(ab, xf, yf - 1) + u * (
        _grad(bb, xf - 1, yf - 1) - _grad(ab, xf, yf - 1)
    )
    return bottom + v * (top - bottom)


def _saddle(size: int) -> np.ndarray:
    axis = np.linspace(-1.0, 1.0, size)
    x, y = np.meshgrid(axis, axis)
    return x * x - y * y


def _two_peaks(size: int) -> np.ndarray:
    # equal bumps on a shallow bowl; mirror-symmetric about the vertical midline
    x, y = _pixel_centers(size)
    sigma = size / 6.0
    d1 = (x - size / 4.0) ** 2 + (y - size / 2.0) ** 2
    d2 = (x - 3.0 * size / 4.0) ** 2 + (y - size / 2.0) ** 2
    u, w = (x - size / 2.0) / size, (y - size / 2.0) / size
    bumps = np.exp(-d1 / (2 * sigma**2)) + np.exp(-d2 / (2 * sigma**2))
    return bumps - 0.5 * (u * u + w * w)


def _ring_gradient(size: int) -> np.ndarray:
    rows, cols = np.mgrid[0:size, 0:size].astype(np.float64)
    center = (size - 1) / 2.0
    r = np.hypot(cols - center, rows - center)
    annulus = (r >= 0.25 * size) & (r <= 0.4 * size)
    return annulus * (cols / (size - 1))


def _radial_rings(size: int) -> np.ndarray:
    x, y = _pixel_centers(size)
    r = np.hypot(x - size / 2.0, y - size / 2.0) / (size / 2.0)
    return np.sin(2.0 * np.pi * 4.0 * r)


def _bump_lattice(size: int, seed: int) -> np.ndarray:
    x, y = _pixel_centers(size)
    heights = np.random.default_rng(seed).uniform(0.5, 1.0, size=16)
    sigma = size / 16.0
    raw = np.zeros((size, size))
    for k, height in enumerate(heights):
        cx = (k % 4 + 0.5) * size / 4.0
        cy = (k // 4 + 0.5) * size / 4.0
        raw += height * np.exp(-((x - cx) ** 2 + (y - cy) ** 2) / (2 * sigma**2))
    return raw


def _sine_plaid(size: int) -> np.ndarray:
    x, y = _pixel_centers(size)
    return np.sin(8.0 * np.pi * x / size) * np.sin(8.0 * np.pi * y / size)
