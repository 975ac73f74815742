from __future__ import annotations

import logging

from dataclasses import dataclass

import numpy as np

from app.cover.intervals import CoverPart, locate_many
from app.errors import CoverMismatchError
from app.field.scalar_field import ScalarField

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LabelMap:
    """
    Per-pixel interval index for one cover part, -1 where the value lies in
    none of the part's intervals.
    """

    labels: np.ndarray

    @property
    def height(self) -> int:
        return self.labels.shape[0]

    @property
    def width(self) -> int:
        return self.labels.shape[1]


def label_pixels(field: ScalarField, part: CoverPart) -> LabelMap:
    cover = part.parent
    values = field.flat
    outside = np.flatnonzero((values <= cover.los.min()) | (values >= cover.his.max()))
    if outside.size:
        pixel = int(outside[0])
        raise CoverMismatchError(
            f"Value {values[pixel]} at pixel {pixel} is not covered", pixel=pixel
        )

    labels = locate_many(part, field.values)
    logger.debug(
        "Labelled %s part: %d of %d pixels present",
        part.parity,
        int((labels >= 0).sum()),
        field.size,
    )
    return LabelMap(labels=labels)


def threshold_labels(field: ScalarField, lo: float, hi: float, index: int) -> LabelMap:
    """Single-interval labelling used by nested covers."""
    values = field.values
    inside = (lo < values) & (values < hi)
    return LabelMap(labels=np.where(inside, index, -1).astype(np.int64))


def find_candidates(*maps: LabelMap) -> np.ndarray:
    """
    Row-scan candidates over the combined label tuple of ``maps``.

    Returns linear pixel indices in row-major order: the first labelled pixel
    of every run of equal label tuples, skipping fully unlabelled pixels.
    """
    stacked = np.stack([m.labels for m in maps])
    present = (stacked >= 0).any(axis=0)
    changed = np.ones(present.shape, dtype=bool)
    changed[:, 1:] = (stacked[:, :, 1:] != stacked[:, :, :-1]).any(axis=0)
    return np.flatnonzero(present & changed)
